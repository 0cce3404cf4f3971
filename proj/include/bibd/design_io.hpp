#pragma once

#include "bibd/design.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace bibd {

// Design file format:
//
//   # comment lines start with '#'
//   v=7            optional; otherwise v is the largest label seen
//   2 3 5          one block per line, 1-based labels
//   -              a lone '-' is the empty block
//
// Blank lines and trailing whitespace are ignored. The writer emits the v=
// line and then the blocks in lexicographic order, single-space separated.

struct ParsedBlocks {
    GroundSet ground;
    std::vector<Block> blocks;
};

/// Syntax only: labels, v= line, duplicates. Throws ParseError with a line number.
ParsedBlocks parse_blocks(std::string_view text);

/// Parses and checks the BIBD axioms (degenerate designs included).
/// Throws AxiomError with the detection witness.
BlockDesign load_design(std::string_view text);

/// Parses a uniform block family without the BIBD check.
BlockFamily load_family(std::string_view text);

/// `header` lines are written as '#' comments before the v= line.
std::string save_design(const BlockFamily& f, std::string_view header = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace bibd
