#include "fpoly/identities.hpp"

#include <algorithm>

#include <json.hpp>

#include "fpoly/errors.hpp"
#include "fpoly/forests.hpp"
#include "fpoly/laplacian.hpp"

namespace fpoly {

void FormalSum::add(const ABPair& pair, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(pair);
    if (it == terms.end()) {
        terms.emplace(pair, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& [p, c] : other.terms) add(p, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
    for (const auto& [p, c] : other.terms) add(p, -c);
    return *this;
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
    FormalSum out = *this;
    out += other;
    return out;
}

FormalSum FormalSum::operator-(const FormalSum& other) const {
    FormalSum out = *this;
    out -= other;
    return out;
}

FormalSum FormalSum::scaled(const Rational& q) const {
    FormalSum out;
    out.m = m;
    if (q == 0) return out;
    for (const auto& [p, c] : terms) out.terms.emplace(p, c * q);
    return out;
}

namespace {

nlohmann::ordered_json terms_to_json(const FormalSum& s, const std::vector<ABPair>* order) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    auto emit = [&](const ABPair& p, const Rational& c) {
        nlohmann::ordered_json t;
        t["A"] = p.A.str();
        t["B"] = p.B.str();
        t["coeff"] = c.get_str();
        arr.push_back(t);
    };
    if (order) {
        for (const ABPair& p : *order) {
            auto it = s.terms.find(p);
            if (it != s.terms.end()) emit(p, it->second);
        }
    } else {
        for (const auto& [p, c] : s.terms) emit(p, c);
    }
    return arr;
}

FormalSum terms_from_json(int m, const nlohmann::json& arr) {
    FormalSum s;
    s.m = m;
    for (const auto& t : arr) {
        ABPair p{canonicalize(Partition::parse(t.at("A").get<std::string>())),
                 canonicalize(Partition::parse(t.at("B").get<std::string>()))};
        if (p.A.m() != m || p.B.m() != m) throw SchemaError("term arity does not match m");
        if (p.A.part_count() != m - 1 || p.A.has_dash()) throw SchemaError("A must have m-1 parts");
        if (p.B.part_count() != 2 || p.B.has_dash()) throw SchemaError("B must have 2 parts");
        Rational c(t.at("coeff").get<std::string>());
        c.canonicalize();
        s.add(p, c);
    }
    return s;
}

}  // namespace

std::string FormalSum::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["terms"] = terms_to_json(*this, nullptr);
    return j.dump();
}

FormalSum FormalSum::from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        return terms_from_json(j.at("m").get<int>(), j.at("terms"));
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad formal sum JSON: ") + e.what());
    }
}

std::string IdentityRecord::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["c"] = c;
    j["j"] = this->j;
    std::vector<ABPair> order = permissible_pairs(m, c, this->j);
    j["terms"] = terms_to_json(sum, &order);
    return j.dump();
}

IdentityRecord IdentityRecord::from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        IdentityRecord rec;
        rec.m = j.at("m").get<int>();
        rec.c = j.at("c").get<int>();
        rec.j = j.at("j").get<int>();
        rec.sum = terms_from_json(rec.m, j.at("terms"));
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad identity JSON: ") + e.what());
    }
}

int expansion_index_of_vertex(int c, int j) { return j < c ? j : j - 1; }

int vertex_of_expansion_index(int c, int jp) { return jp < c ? jp : jp + 1; }

namespace {

void check_cj(int m, int c, int j) {
    if (m < 3) throw BadIndex("need m >= 3");
    if (c < 1 || c > m || j < 1 || j > m) throw BadIndex("c and j must be marked vertices in 1..m");
    if (j == c) throw BadIndex("expansion vertex j must differ from removed column c");
}

Partition a_partition_pairing(int m, int u, int v) {
    Partition p;
    p.entries.assign(static_cast<std::size_t>(m), 0);
    if (u > v) std::swap(u, v);
    int label = 0;
    for (int w = 1; w <= m; ++w) {
        if (w == v) {
            p.entries[w - 1] = p.entries[u - 1];
        } else {
            p.entries[w - 1] = ++label;
        }
    }
    return canonicalize(p);
}

}  // namespace

std::vector<ABPair> permissible_pairs(int m, int c, int j) {
    check_cj(m, c, j);
    std::vector<int> partners;
    partners.push_back(c);
    for (int l = 1; l <= m; ++l) {
        if (l != c && l != j) partners.push_back(l);
    }
    std::vector<Partition> bs = enumerate_B(m);
    std::vector<ABPair> out;
    for (int l : partners) {
        Partition a = a_partition_pairing(m, j, l);
        for (const Partition& b : bs) {
            if (b.entries[j - 1] == b.entries[c - 1]) continue;
            if (b.entries[j - 1] == b.entries[l - 1]) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

IdentityRecord gen_identity(int m, int c, int j) {
    IdentityRecord rec;
    rec.m = m;
    rec.c = c;
    rec.j = j;
    rec.sum.m = m;
    for (const ABPair& p : permissible_pairs(m, c, j)) rec.sum.add(p, 1);
    return rec;
}

Poly rhs_via_determinants(const MarkedGraph& g, int r, int c, int jp) {
    MarkedGraph h = g.normalized();
    const int m = h.m();
    const int k = m - 1;
    if (r < 1 || r > m || c < 1 || c > m) throw BadIndex("row and column must be in 1..m");
    if (jp < 1 || jp > k) throw BadIndex("expansion index must be in 1..m-1");
    SymMatrix L = laplacian(h);

    auto marked_minus = [m](int skip) {
        std::vector<int> out;
        for (int v = 1; v <= m; ++v) {
            if (v != skip) out.push_back(v);
        }
        return out;
    };

    // the displayed expansion: for j < c the minors use column jp, for
    // c <= j they use column jp+1, while the sign stays (-1)^(i+jp). The
    // whole sum equals det(L_{r,c}) det(L_{[m],[m]}) = (-1)^(r+c) times the
    // forest product, so the identity is normalized by (-1)^(r+c); that is
    // the form whose AB content is independent of the removed row.
    const int col = (jp < c) ? jp : jp + 1;
    Poly out;
    auto add_term = [&](int i, int row_removed) {
        Poly a = minor_det(L, {marked_minus(row_removed), marked_minus(col)});
        Poly b = minor_det(L, {{std::min(row_removed, r), std::max(row_removed, r)},
                               {std::min(col, c), std::max(col, c)}});
        out.add_scaled_product(a, b, ((i + jp + r + c) % 2 == 0) ? 1 : -1);
    };
    for (int i = 1; i <= r - 1; ++i) add_term(i, i);
    for (int i = r; i <= k; ++i) add_term(i, i + 1);
    return out;
}

namespace {

Poly sum_of_products(const FormalSum& s, const MarkedGraph& g, const Rational& extra,
                     const Poly& extra_poly) {
    // clear denominators so the whole comparison stays in integer polynomials
    BigInt denom_lcm = 1;
    for (const auto& [p, c] : s.terms) {
        BigInt d = c.get_den();
        denom_lcm = lcm(denom_lcm, d);
    }
    if (extra != 0) denom_lcm = lcm(denom_lcm, BigInt(extra.get_den()));

    std::map<Partition, Poly> poly_cache;
    auto fp = [&](const Partition& p) -> const Poly& {
        auto it = poly_cache.find(p);
        if (it != poly_cache.end()) return it->second;
        return poly_cache.emplace(p, forest_poly(g, p)).first->second;
    };

    Poly acc;
    for (const auto& [pair, coeff] : s.terms) {
        Rational scaled = coeff * denom_lcm;
        acc.add_scaled_product(fp(pair.A), fp(pair.B), BigInt(scaled.get_num()));
    }
    if (extra != 0) {
        Rational scaled = extra * denom_lcm;
        acc.add_scaled_product(extra_poly, Poly::constant(1), BigInt(scaled.get_num()));
    }
    return acc;
}

Partition all_ones(int m) {
    Partition p;
    p.entries.assign(static_cast<std::size_t>(m), 1);
    return p;
}

Partition all_distinct(int m) {
    Partition p;
    for (int i = 1; i <= m; ++i) p.entries.push_back(i);
    return p;
}

}  // namespace

bool verify_identity(const FormalSum& s, const MarkedGraph& g) {
    if (s.m != g.m()) throw BadIndex("formal sum arity does not match the graph's marked count");
    Poly lhs = forest_poly(g, all_ones(s.m)) * forest_poly(g, all_distinct(s.m));
    Poly rhs_minus_lhs = sum_of_products(s, g, -1, lhs);
    return rhs_minus_lhs.is_zero();
}

bool evaluates_to_zero(const FormalSum& s, const MarkedGraph& g) {
    if (s.m != g.m()) throw BadIndex("formal sum arity does not match the graph's marked count");
    return sum_of_products(s, g, 0, Poly::zero()).is_zero();
}

FormalSum block_sum(int m, int c) {
    FormalSum out;
    out.m = m;
    for (int j = 1; j <= m; ++j) {
        if (j == c) continue;
        out += gen_identity(m, c, j).sum;
    }
    return out;
}

FormalSum all_nonforbidden_sum(int m) {
    if (m < 3) throw BadIndex("need m >= 3");
    FormalSum out;
    out.m = m;
    for (const Partition& a : enumerate_A(m)) {
        for (const Partition& b : enumerate_B(m)) {
            ABPair p{a, b};
            if (!is_forbidden(p)) out.add(p, 1);
        }
    }
    return out;
}

// ---- the m = 4 tables ----

namespace {

const std::array<Partition, 6>& m4_a_table() {
    static const std::array<Partition, 6> table = {
        Partition({1, 1, 2, 3}), Partition({1, 2, 1, 3}), Partition({1, 2, 2, 3}),
        Partition({1, 2, 3, 1}), Partition({1, 2, 3, 2}), Partition({1, 2, 3, 3}),
    };
    return table;
}

const std::array<Partition, 7>& m4_b_table() {
    static const std::array<Partition, 7> table = {
        Partition({1, 1, 1, 2}), Partition({1, 1, 2, 1}), Partition({1, 2, 1, 1}),
        Partition({1, 2, 2, 2}), Partition({1, 1, 2, 2}), Partition({1, 2, 1, 2}),
        Partition({1, 2, 2, 1}),
    };
    return table;
}

struct VYTerm {
    int a;          // A index, 1-based
    int b;          // B index, 1-based
    int c0;         // constant part of the coefficient
    int cx[8];      // multipliers of x_1..x_8
};

// coefficient table of the 8-parameter identity
const std::array<VYTerm, 24>& vy_table() {
    static const std::array<VYTerm, 24> table = {{
        {4, 1, 1, {-1, -1, 0, 0, 0, 0, 0, 0}},
        {2, 4, 0, {0, 0, 0, 0, 0, 0, 1, 0}},
        {5, 1, 1, {0, -1, -1, 0, 0, 0, 0, 0}},
        {6, 1, 1, {-1, 0, 0, -1, 0, 0, 0, 0}},
        {2, 2, 0, {0, 1, 0, 0, 0, 0, 0, 0}},
        {3, 2, 0, {0, 1, 1, 0, -1, 0, 0, 0}},
        {6, 2, 1, {-1, 0, 0, 0, 0, -1, 0, 0}},
        {1, 3, 0, {1, 0, 0, 0, 0, 0, 0, 0}},
        {3, 3, 0, {1, 0, 0, 1, 0, 0, -1, 0}},
        {5, 3, 0, {1, 0, 0, 0, 0, 1, 0, -1}},
        {1, 4, 0, {0, 0, 0, 0, 1, 0, 0, 0}},
        {3, 5, 0, {1, 0, 0, 1, -1, 0, 0, 0}},
        {5, 5, 0, {1, 0, 0, 0, -1, 1, 0, 0}},
        {1, 6, 0, {0, 0, 1, 0, 0, 0, 0, 0}},
        {3, 6, 0, {0, 1, 1, 0, 0, 0, -1, 0}},
        {4, 6, 1, {-1, -1, 0, 0, 0, -1, 0, 1}},
        {2, 7, 0, {0, 1, 0, -1, 0, 0, 1, 0}},
        {6, 6, 1, {-1, 0, 0, 0, 0, -1, -1, 1}},
        {1, 7, 0, {1, 0, -1, 0, 1, 0, 0, 0}},
        {5, 7, 1, {0, -1, -1, 0, 1, 0, 0, -1}},
        {6, 7, 1, {-1, 0, 0, -1, 0, 0, 1, -1}},
        {4, 4, 0, {0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 5, 0, {0, 0, 0, 1, 0, 0, 0, 0}},
        {4, 5, 0, {0, 0, 0, 0, 0, 1, 0, 0}},
    }};
    return table;
}

struct DisplayRow {
    int c;
    int jp;
    // three partner groups: (A index, B indices)
    int a0, a1, a2;
    std::array<int, 4> b0;
    std::array<int, 2> b1;
    std::array<int, 2> b2;
    std::array<int, 8> x;  // the specializing x-assignment
};

const std::array<DisplayRow, 12>& display_table() {
    static const std::array<DisplayRow, 12> table = {{
        {4, 1, 4, 1, 2, {1, 4, 5, 6}, {4, 6}, {4, 5}, {0, 0, 1, 1, 1, 1, 1, 1}},
        {4, 2, 5, 1, 3, {1, 3, 5, 7}, {3, 7}, {3, 5}, {1, 0, 0, 0, 0, 0, 0, 0}},
        {4, 3, 6, 2, 3, {1, 2, 6, 7}, {2, 7}, {2, 6}, {0, 1, 0, 0, 0, 0, 0, 0}},
        {3, 1, 2, 1, 4, {2, 4, 5, 7}, {4, 7}, {4, 5}, {0, 1, 0, 1, 1, 1, 1, 1}},
        {3, 2, 3, 1, 5, {2, 3, 5, 6}, {3, 6}, {3, 5}, {1, 0, 1, 0, 0, 0, 0, 0}},
        {3, 3, 6, 4, 5, {1, 2, 6, 7}, {1, 6}, {1, 7}, {0, 0, 0, 0, 0, 0, 0, 0}},
        {2, 1, 1, 2, 4, {3, 4, 6, 7}, {4, 7}, {4, 6}, {1, 0, 1, 0, 1, 0, 1, 1}},
        {2, 2, 3, 2, 6, {2, 3, 5, 6}, {2, 5}, {2, 6}, {0, 1, 0, 1, 0, 0, 0, 0}},
        {2, 3, 5, 4, 6, {1, 3, 5, 7}, {1, 5}, {1, 7}, {0, 0, 0, 0, 0, 1, 0, 0}},
        {1, 1, 1, 3, 5, {3, 4, 6, 7}, {3, 6}, {3, 7}, {1, 0, 1, 0, 1, 0, 0, 0}},
        {1, 2, 2, 3, 6, {2, 4, 5, 7}, {2, 5}, {2, 7}, {0, 1, 0, 1, 0, 0, 1, 0}},
        {1, 3, 4, 5, 6, {1, 4, 5, 6}, {1, 5}, {1, 6}, {0, 0, 0, 0, 0, 1, 0, 1}},
    }};
    return table;
}

const DisplayRow& display_row(int c, int jp) {
    for (const DisplayRow& row : display_table()) {
        if (row.c == c && row.jp == jp) return row;
    }
    throw BadIndex("no display for c=" + std::to_string(c) + ", j=" + std::to_string(jp));
}

}  // namespace

const Partition& m4_A(int idx) { return m4_a_table().at(static_cast<std::size_t>(idx - 1)); }
const Partition& m4_B(int idx) { return m4_b_table().at(static_cast<std::size_t>(idx - 1)); }

FormalSum vy_identity(const VYParams& x) {
    FormalSum out;
    out.m = 4;
    for (const VYTerm& t : vy_table()) {
        Rational coeff(t.c0);
        for (int i = 0; i < 8; ++i) {
            if (t.cx[i] != 0) coeff += Rational(t.cx[i]) * x.v[static_cast<std::size_t>(i)];
        }
        out.add({m4_A(t.a), m4_B(t.b)}, coeff);
    }
    return out;
}

namespace {

FormalSum column_identity(int c, int jp) { return gen_identity(4, c, vertex_of_expansion_index(c, jp)).sum; }

}  // namespace

FormalSum vy_from_column_identities(const VYParams& y) {
    FormalSum out = column_identity(3, 1) + column_identity(3, 2) - column_identity(3, 3);
    struct Diff {
        int c_pos, j_pos, c_neg, j_neg;
    };
    static const std::array<Diff, 8> diffs = {{
        {4, 1, 2, 1},  // y1
        {4, 1, 3, 1},  // y2
        {4, 2, 3, 2},  // y3
        {4, 3, 2, 2},  // y4
        {4, 2, 1, 1},  // y5
        {3, 3, 2, 3},  // y6
        {4, 3, 1, 2},  // y7
        {3, 3, 1, 3},  // y8
    }};
    for (int i = 0; i < 8; ++i) {
        const Rational& yi = y.v[static_cast<std::size_t>(i)];
        if (yi == 0) continue;
        FormalSum diff = column_identity(diffs[static_cast<std::size_t>(i)].c_pos,
                                         diffs[static_cast<std::size_t>(i)].j_pos) -
                         column_identity(diffs[static_cast<std::size_t>(i)].c_neg,
                                         diffs[static_cast<std::size_t>(i)].j_neg);
        out += diff.scaled(yi);
    }
    return out;
}

VYParams vy_x_from_y(const VYParams& y) {
    VYParams x;
    for (int i : {0, 1, 4, 6, 7}) x.v[static_cast<std::size_t>(i)] = 1 - y.v[static_cast<std::size_t>(i)];
    x.v[2] = 1 - y.v[2] + y.v[1] - y.v[4];  // x3 = 1 - y3 + y2 - y5
    x.v[3] = 1 - y.v[3] + y.v[0] - y.v[6];  // x4 = 1 - y4 + y1 - y7
    x.v[5] = 1 - y.v[5] + y.v[0] - y.v[7];  // x6 = 1 - y6 + y1 - y8
    return x;
}

VYParams vy_y_from_x(const VYParams& x) {
    VYParams y;
    for (int i : {0, 1, 4, 6, 7}) y.v[static_cast<std::size_t>(i)] = 1 - x.v[static_cast<std::size_t>(i)];
    y.v[2] = 1 - x.v[2] - x.v[1] + x.v[4];  // y3 = 1 - x3 - x2 + x5
    y.v[3] = 1 - x.v[3] - x.v[0] + x.v[6];  // y4 = 1 - x4 - x1 + x7
    y.v[5] = 1 - x.v[5] - x.v[0] + x.v[7];  // y6 = 1 - x6 - x1 + x8
    return y;
}

FormalSum m4_display(int c, int jp) {
    const DisplayRow& row = display_row(c, jp);
    FormalSum out;
    out.m = 4;
    for (int b : row.b0) out.add({m4_A(row.a0), m4_B(b)}, 1);
    for (int b : row.b1) out.add({m4_A(row.a1), m4_B(b)}, 1);
    for (int b : row.b2) out.add({m4_A(row.a2), m4_B(b)}, 1);
    return out;
}

VYParams m4_specialization(int c, int jp) {
    const DisplayRow& row = display_row(c, jp);
    VYParams x;
    for (int i = 0; i < 8; ++i) x.v[static_cast<std::size_t>(i)] = row.x[static_cast<std::size_t>(i)];
    return x;
}

}  // namespace fpoly
