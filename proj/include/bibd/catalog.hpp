#pragma once

#include "bibd/design.hpp"
#include "bibd/family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bibd {

struct CatalogEntry {
    std::string name;
    BlockDesign design;
    /// Where the design comes from.
    std::string provenance;
};

/// Fano plane with blocks in their traditional order
/// (2,3,5), (3,4,6), (4,5,7), (1,5,6), (2,6,7), (1,3,7), (1,2,4).
BlockDesign fano_plane();

/// The (9,12,8,6,5) design that is friends with itself without being covered
/// by any closed-form self-friendship case.
BlockDesign design_9_12_8_6_5();

/// Two STS(13) sharing 22 blocks and differing in the last four.
BlockDesign sts13_s1();
BlockDesign sts13_s2();

/// The ten-member friendly family on the Fano plane's points:
/// D0, D1, D2, P3, D3', D4, D4', D5, D6, D7. D3' holds the non-line triples,
/// D4 the line complements and D4' the remaining 4-subsets.
std::vector<NamedDesign> fano_family();

/// Every embedded design, validated. Built once; safe to share.
const std::vector<CatalogEntry>& catalog();

/// Throws std::out_of_range for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

} // namespace bibd
