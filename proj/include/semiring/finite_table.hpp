#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "semiring/errors.hpp"
#include "semiring/random.hpp"

namespace semiring {

struct AxiomViolation {
    std::string axiom;                 // e.g. "mul-associative", "zero-absorbing"
    std::vector<std::size_t> witness;  // the offending tuple of element indices

    std::string describe() const {
        std::string s = axiom + " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(witness[i]);
        }
        return s + ")";
    }
};

/// An order-n semiring given by explicit operation tables over element
/// indices. Index 0 is the zero element, index 1 the one element. Instances
/// produced by from_tables are fully validated; the raw accessors skip range
/// checks and are for hot loops over known-good indices.
class FiniteSemiring {
public:
    using value_type = std::size_t;
    using Table = std::vector<std::vector<std::size_t>>;
    static constexpr bool finite_carrier = true;

    // Collects every axiom violation instead of stopping at the first.
    static std::vector<AxiomViolation> validate(const Table& add, const Table& mul) {
        std::vector<AxiomViolation> out;
        std::size_t n = add.size();
        if (n < 2) {
            out.push_back({"zero-equals-one", {}});
            return out;
        }
        if (mul.size() != n) {
            out.push_back({"table-shape", {}});
            return out;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (add[i].size() != n || mul[i].size() != n) {
                out.push_back({"table-shape", {i}});
                return out;
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (add[i][j] >= n || mul[i][j] >= n) {
                    out.push_back({"entry-range", {i, j}});
                    return out;
                }

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (add[i][j] != add[j][i]) out.push_back({"add-commutative", {i, j}});
                if (mul[i][j] != mul[j][i]) out.push_back({"mul-commutative", {i, j}});
            }
        for (std::size_t i = 0; i < n; ++i) {
            if (add[0][i] != i) out.push_back({"add-identity", {0, i}});
            if (mul[1][i] != i) out.push_back({"mul-identity", {1, i}});
            if (mul[0][i] != 0) out.push_back({"absorption", {0, i}});
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    if (add[add[a][b]][c] != add[a][add[b][c]])
                        out.push_back({"add-associative", {a, b, c}});
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                        out.push_back({"mul-associative", {a, b, c}});
                    if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                        out.push_back({"distributivity", {a, b, c}});
                }
        return out;
    }

    static FiniteSemiring from_tables(const Table& add, const Table& mul) {
        auto violations = validate(add, mul);
        if (!violations.empty()) throw Error("invalid tables: " + violations.front().describe());
        return FiniteSemiring(add, mul);
    }

    // Trusted constructor for the enumerator, which maintains the axioms
    // incrementally and would only pay for re-validation.
    static FiniteSemiring unchecked(std::size_t n, std::vector<std::size_t> add_flat,
                                    std::vector<std::size_t> mul_flat) {
        FiniteSemiring s;
        s.n_ = n;
        s.add_ = std::move(add_flat);
        s.mul_ = std::move(mul_flat);
        return s;
    }

    std::size_t order() const { return n_; }

    std::string name() const { return "table" + std::to_string(n_); }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type add(value_type a, value_type b) const {
        check(a);
        check(b);
        return add_[a * n_ + b];
    }
    value_type mul(value_type a, value_type b) const {
        check(a);
        check(b);
        return mul_[a * n_ + b];
    }
    value_type add_raw(value_type a, value_type b) const { return add_[a * n_ + b]; }
    value_type mul_raw(value_type a, value_type b) const { return mul_[a * n_ + b]; }

    bool equal(value_type a, value_type b) const { return a == b; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit(value_type a) const {
        check(a);
        for (std::size_t b = 0; b < n_; ++b)
            if (mul_raw(a, b) == 1) return true;
        return false;
    }

    std::vector<value_type> elements() const {
        std::vector<value_type> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = i;
        return out;
    }
    std::vector<value_type> elements_up_to(unsigned long) const { return elements(); }
    value_type sample(Rng& rng, unsigned long = 0) const { return uniform_below(rng, n_); }

    std::string str(value_type a) const { return std::to_string(a); }
    value_type parse(const std::string& text) const {
        for (char c : text)
            if (c < '0' || c > '9') throw ParseError("bad element index: " + text);
        if (text.empty()) throw ParseError("empty element index");
        std::size_t v = std::stoul(text);
        check(v);
        return v;
    }

    friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
        return a.n_ == b.n_ && a.add_ == b.add_ && a.mul_ == b.mul_;
    }

    // ---- table file format ----------------------------------------------
    // order <n>
    // add
    // <n rows of n space-separated indices>
    // mul
    // <same>
    // Lines starting with '#' are comments.

    std::string table_text() const {
        std::ostringstream os;
        os << "order " << n_ << "\n";
        auto dump = [&](const char* tag, const std::vector<std::size_t>& t) {
            os << tag << "\n";
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) {
                    if (j) os << ' ';
                    os << t[i * n_ + j];
                }
                os << "\n";
            }
        };
        dump("add", add_);
        dump("mul", mul_);
        return os.str();
    }

    static FiniteSemiring parse_table_text(std::istream& in) {
        std::string line;
        int lineno = 0;
        auto next_line = [&](std::string& out) -> bool {
            while (std::getline(in, line)) {
                ++lineno;
                std::size_t start = line.find_first_not_of(" \t\r");
                if (start == std::string::npos) continue;
                if (line[start] == '#') continue;
                out = line;
                return true;
            }
            return false;
        };

        std::string l;
        if (!next_line(l)) throw ParseError("missing 'order' line", lineno);
        std::istringstream hs(l);
        std::string tag;
        long order = -1;
        hs >> tag >> order;
        if (tag != "order" || order < 0)
            throw ParseError("expected 'order <n>'", lineno);
        auto n = static_cast<std::size_t>(order);

        auto read_table = [&](const std::string& want) {
            if (!next_line(l)) throw ParseError("missing '" + want + "' section", lineno);
            std::istringstream ts(l);
            ts >> tag;
            if (tag != want) throw ParseError("expected '" + want + "' section", lineno);
            std::vector<std::size_t> flat;
            flat.reserve(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!next_line(l)) throw ParseError("missing row in '" + want + "'", lineno);
                std::istringstream rs(l);
                for (std::size_t j = 0; j < n; ++j) {
                    long v = -1;
                    if (!(rs >> v) || v < 0)
                        throw ParseError("bad entry in '" + want + "'", lineno,
                                         static_cast<int>(j + 1));
                    flat.push_back(static_cast<std::size_t>(v));
                }
                long extra;
                if (rs >> extra) throw ParseError("row too long in '" + want + "'", lineno);
            }
            return flat;
        };

        auto add_flat = read_table("add");
        auto mul_flat = read_table("mul");
        Table add(n, std::vector<std::size_t>(n)), mul(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                add[i][j] = add_flat[i * n + j];
                mul[i][j] = mul_flat[i * n + j];
            }
        auto violations = validate(add, mul);
        if (!violations.empty()) {
            std::string msg = "tables violate axioms:";
            for (const auto& v : violations) msg += " " + v.describe();
            throw Error(msg);
        }
        return from_tables(add, mul);
    }

    // Parses tables without validating the axioms; used by `validate` so the
    // violation list can be reported instead of thrown away.
    static std::pair<std::size_t, std::pair<Table, Table>> parse_tables_raw(std::istream& in);

private:
    FiniteSemiring() = default;
    FiniteSemiring(const Table& add, const Table& mul) : n_(add.size()) {
        add_.reserve(n_ * n_);
        mul_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) add_.push_back(add[i][j]);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) mul_.push_back(mul[i][j]);
    }

    void check(value_type a) const {
        if (a >= n_)
            throw MismatchError("element " + std::to_string(a) +
                                " does not belong to a semiring of order " + std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> add_, mul_;
};

inline std::pair<std::size_t, std::pair<FiniteSemiring::Table, FiniteSemiring::Table>>
FiniteSemiring::parse_tables_raw(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string l;
    if (!next_line(l)) throw ParseError("missing 'order' line", lineno);
    std::istringstream hs(l);
    std::string tag;
    long order = -1;
    hs >> tag >> order;
    if (tag != "order" || order < 0) throw ParseError("expected 'order <n>'", lineno);
    auto n = static_cast<std::size_t>(order);
    auto read_table = [&](const std::string& want) {
        if (!next_line(l)) throw ParseError("missing '" + want + "' section", lineno);
        std::istringstream ts(l);
        ts >> tag;
        if (tag != want) throw ParseError("expected '" + want + "' section", lineno);
        Table t(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (!next_line(l)) throw ParseError("missing row in '" + want + "'", lineno);
            std::istringstream rs(l);
            for (std::size_t j = 0; j < n; ++j) {
                long v = -1;
                if (!(rs >> v) || v < 0)
                    throw ParseError("bad entry in '" + want + "'", lineno, static_cast<int>(j + 1));
                t[i][j] = static_cast<std::size_t>(v);
            }
            long extra;
            if (rs >> extra) throw ParseError("row too long in '" + want + "'", lineno);
        }
        return t;
    };
    auto add = read_table("add");
    auto mul = read_table("mul");
    return {n, {add, mul}};
}

}  // namespace semiring
