#pragma once

#include "bibd/design.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bibd {

/// Addition and multiplication tables of a finite field on 0..q-1, with 0 the
/// zero and 1 the one. Construction verifies every field axiom.
class FieldTables {
public:
    /// Throws AxiomError with a witness (e.g. "a*(b+c) != a*b+a*c at (2,3,1)").
    FieldTables(int q, std::vector<int> add, std::vector<int> mul);

    int order() const { return q_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }

    /// The table file format read by load_field_tables.
    std::string to_text() const;

    friend bool operator==(const FieldTables&, const FieldTables&) = default;

private:
    int q_;
    std::vector<int> add_;
    std::vector<int> mul_;
};

/// GF(p) by arithmetic mod p. Throws std::invalid_argument unless p is a
/// prime <= 61.
FieldTables prime_field(int p);

/// Format: "q=<int>", q rows of q integers (addition), a line "*", q rows of
/// q integers (multiplication). '#' comments and blank lines are ignored.
/// Throws ParseError or AxiomError.
FieldTables load_field_tables(std::string_view text);

/// PG(2,q): points and lines are the normalized nonzero triples (first
/// nonzero coordinate 1) in lexicographic order; point x lies on line a when
/// a0 x0 + a1 x1 + a2 x2 = 0. Throws std::invalid_argument when
/// q^2+q+1 > 64.
BlockDesign projective_plane(const FieldTables& field);

} // namespace bibd
