#include "bibd/design_io.hpp"

#include "bibd/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace bibd {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, int line)
{
    int value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "not an integer: '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

ParsedBlocks parse_blocks(std::string_view text)
{
    int declared_v = 0;
    bool seen_data = false;
    int max_label = 0;
    std::vector<Block> blocks;
    std::vector<int> block_lines;
    std::unordered_map<std::uint64_t, int> first_line;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.starts_with("v=")) {
            if (seen_data) {
                throw ParseError(line_no, "v= must be the first data line");
            }
            declared_v = parse_int(trim(line.substr(2)), line_no);
            if (declared_v < 1 || declared_v > kMaxPoints) {
                throw ParseError(line_no, "v=" + std::to_string(declared_v) + " outside 1.." +
                                              std::to_string(kMaxPoints));
            }
            seen_data = true;
            continue;
        }
        seen_data = true;

        std::uint64_t bits = 0;
        if (line != "-") {
            std::size_t p = 0;
            while (p < line.size()) {
                const auto start = line.find_first_not_of(" \t", p);
                if (start == std::string_view::npos) {
                    break;
                }
                const auto stop = line.find_first_of(" \t", start);
                const auto token = line.substr(start, stop == std::string_view::npos ? std::string_view::npos
                                                                                     : stop - start);
                p = stop == std::string_view::npos ? line.size() : stop;
                const int label = parse_int(token, line_no);
                if (label < 1 || label > kMaxPoints || (declared_v > 0 && label > declared_v)) {
                    throw ParseError(line_no, "label " + std::to_string(label) + " out of range");
                }
                const std::uint64_t bit = std::uint64_t{1} << (label - 1);
                if (bits & bit) {
                    throw ParseError(line_no, "label " + std::to_string(label) + " repeated in block");
                }
                bits |= bit;
                max_label = std::max(max_label, label);
            }
        }
        const Block blk{bits};
        const auto [it, inserted] = first_line.emplace(bits, line_no);
        if (!inserted) {
            throw ParseError(line_no, "duplicate block " + blk.to_set_string() + " (first at line " +
                                          std::to_string(it->second) + ")");
        }
        blocks.push_back(blk);
        block_lines.push_back(line_no);
    }

    const int v = declared_v > 0 ? declared_v : max_label;
    if (v < 1) {
        throw ParseError(line_no, "no v= line and no labels");
    }
    return ParsedBlocks{GroundSet(v), std::move(blocks)};
}

BlockDesign load_design(std::string_view text)
{
    auto parsed = parse_blocks(text);
    return BlockDesign(BlockFamily(parsed.ground, std::move(parsed.blocks)));
}

BlockFamily load_family(std::string_view text)
{
    auto parsed = parse_blocks(text);
    return BlockFamily(parsed.ground, std::move(parsed.blocks));
}

std::string save_design(const BlockFamily& f, std::string_view header)
{
    std::ostringstream out;
    std::size_t pos = 0;
    while (pos < header.size()) {
        const auto nl = header.find('\n', pos);
        const auto line = header.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        out << "# " << line << '\n';
        pos = nl == std::string_view::npos ? header.size() : nl + 1;
    }
    out << "v=" << f.v() << '\n';
    for (Block blk : f.sorted_blocks()) {
        out << (blk.empty() ? std::string("-") : blk.to_string()) << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
}

} // namespace bibd
