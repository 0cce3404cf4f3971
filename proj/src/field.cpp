#include "bibd/field.hpp"

#include "bibd/error.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace bibd {

namespace {

std::string triple(int a, int b, int c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

} // namespace

FieldTables::FieldTables(int q, std::vector<int> add, std::vector<int> mul)
    : q_(q), add_(std::move(add)), mul_(std::move(mul))
{
    if (q < 2) {
        throw AxiomError("field order must be at least 2");
    }
    const auto cells = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
    if (add_.size() != cells || mul_.size() != cells) {
        throw AxiomError("tables must have q*q entries");
    }
    for (std::size_t i = 0; i < cells; ++i) {
        if (add_[i] < 0 || add_[i] >= q || mul_[i] < 0 || mul_[i] >= q) {
            throw AxiomError("table entry outside 0.." + std::to_string(q - 1));
        }
    }

    for (int a = 0; a < q; ++a) {
        if (this->add(a, 0) != a) {
            throw AxiomError("0 is not an additive identity at " + std::to_string(a));
        }
        if (this->mul(a, 1) != a) {
            throw AxiomError("1 is not a multiplicative identity at " + std::to_string(a));
        }
        bool has_negative = false;
        bool has_inverse = a == 0;
        for (int b = 0; b < q; ++b) {
            if (this->add(a, b) != this->add(b, a)) {
                throw AxiomError("a+b != b+a at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
            if (this->mul(a, b) != this->mul(b, a)) {
                throw AxiomError("a*b != b*a at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
            has_negative = has_negative || this->add(a, b) == 0;
            has_inverse = has_inverse || this->mul(a, b) == 1;
            for (int c = 0; c < q; ++c) {
                if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c))) {
                    throw AxiomError("(a+b)+c != a+(b+c) at " + triple(a, b, c));
                }
                if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c))) {
                    throw AxiomError("(a*b)*c != a*(b*c) at " + triple(a, b, c));
                }
                if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c))) {
                    throw AxiomError("a*(b+c) != a*b+a*c at " + triple(a, b, c));
                }
            }
        }
        if (!has_negative) {
            throw AxiomError("no additive inverse for " + std::to_string(a));
        }
        if (!has_inverse) {
            throw AxiomError("no multiplicative inverse for " + std::to_string(a));
        }
    }
}

std::string FieldTables::to_text() const
{
    std::ostringstream out;
    out << "q=" << q_ << '\n';
    auto rows = [&](const std::vector<int>& table) {
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                out << (b ? " " : "") << table[static_cast<std::size_t>(a * q_ + b)];
            }
            out << '\n';
        }
    };
    rows(add_);
    out << "*\n";
    rows(mul_);
    return out.str();
}

FieldTables prime_field(int p)
{
    bool prime = p >= 2 && p <= 61;
    for (int d = 2; prime && d * d <= p; ++d) {
        prime = p % d != 0;
    }
    if (!prime) {
        throw std::invalid_argument(std::to_string(p) +
                                    " is not a prime <= 61; load prime-power fields from a table file");
    }
    std::vector<int> add, mul;
    for (int a = 0; a < p; ++a) {
        for (int b = 0; b < p; ++b) {
            add.push_back((a + b) % p);
            mul.push_back((a * b) % p);
        }
    }
    return FieldTables(p, std::move(add), std::move(mul));
}

FieldTables load_field_tables(std::string_view text)
{
    int q = 0;
    std::vector<int> add, mul;
    bool in_mul = false;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const std::string_view body = std::string_view(line).substr(first);
        if (body.starts_with("q=")) {
            if (q != 0) {
                throw ParseError(line_no, "second q= line");
            }
            std::istringstream num{std::string(body.substr(2))};
            if (!(num >> q) || q < 2) {
                throw ParseError(line_no, "bad field order");
            }
            continue;
        }
        if (q == 0) {
            throw ParseError(line_no, "table before q= line");
        }
        if (body.front() == '*') {
            if (in_mul) {
                throw ParseError(line_no, "second '*' separator");
            }
            in_mul = true;
            continue;
        }
        std::istringstream row{std::string(body)};
        std::string token;
        int count = 0;
        while (row >> token) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ParseError(line_no, "not an integer: '" + token + "'");
            }
            (in_mul ? mul : add).push_back(value);
            ++count;
        }
        if (count != q) {
            throw ParseError(line_no, "expected " + std::to_string(q) + " entries, got " + std::to_string(count));
        }
    }
    if (q == 0) {
        throw ParseError(line_no, "missing q= line");
    }
    const auto cells = static_cast<std::size_t>(q * q);
    if (!in_mul || add.size() != cells || mul.size() != cells) {
        throw ParseError(line_no, "expected " + std::to_string(q) + " addition rows, '*', and " + std::to_string(q) +
                                      " multiplication rows");
    }
    return FieldTables(q, std::move(add), std::move(mul));
}

BlockDesign projective_plane(const FieldTables& field)
{
    const int q = field.order();
    const int v = q * q + q + 1;
    if (v > kMaxPoints) {
        throw std::invalid_argument("PG(2," + std::to_string(q) + ") has " + std::to_string(v) +
                                    " points; at most 64 are supported");
    }
    // Normalized representatives (first nonzero coordinate 1), lexicographic.
    std::vector<std::array<int, 3>> points;
    for (int x0 = 0; x0 < q; ++x0) {
        for (int x1 = 0; x1 < q; ++x1) {
            for (int x2 = 0; x2 < q; ++x2) {
                const int lead = x0 != 0 ? x0 : x1 != 0 ? x1 : x2;
                if (lead == 1) {
                    points.push_back({x0, x1, x2});
                }
            }
        }
    }
    std::vector<Block> lines;
    for (const auto& a : points) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& x = points[i];
            const int dot = field.add(field.add(field.mul(a[0], x[0]), field.mul(a[1], x[1])), field.mul(a[2], x[2]));
            if (dot == 0) {
                bits |= std::uint64_t{1} << i;
            }
        }
        lines.push_back(Block{bits});
    }
    return BlockDesign(GroundSet(v), std::move(lines));
}

} // namespace bibd
