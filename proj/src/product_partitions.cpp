#include "combex/product_partitions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "combex/graph_intersect.hpp"

namespace combex {

namespace {

// edges of K_{X,Y} as pair indices of K_n
std::vector<int> bipartite_edges(int n, uint32_t x, uint32_t y) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u) {
        if (!((x >> u) & 1)) continue;
        for (int v = 0; v < n; ++v)
            if ((y >> v) & 1) out.push_back(pair_index(n, u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void validate_block(const ProductCover& c, const ProductBlock& b) {
    auto side = [](uint32_t x, uint32_t y, int n) {
        if (x == 0 || y == 0) throw std::invalid_argument("block side is empty");
        if (x & y) throw std::invalid_argument("block sides intersect");
        if ((x | y) >> n) throw std::invalid_argument("block outside the vertex range");
    };
    side(b.x1, b.y1, c.n1);
    side(b.x2, b.y2, c.n2);
}

std::vector<int> block_elements(const ProductCover& c, const ProductBlock& b) {
    int e2 = pair_count(c.n2);
    std::vector<int> out;
    for (int a : bipartite_edges(c.n1, b.x1, b.y1))
        for (int bb : bipartite_edges(c.n2, b.x2, b.y2)) out.push_back(a * e2 + bb);
    return out;
}

}  // namespace

ProductCoverCheck check_product_cover(const ProductCover& c, CoverMode mode) {
    int e1 = pair_count(c.n1), e2 = pair_count(c.n2);
    std::vector<int> count(size_t(e1) * e2, 0);
    for (const auto& b : c.blocks) {
        validate_block(c, b);
        for (int el : block_elements(c, b)) ++count[el];
    }
    for (int a = 0; a < e1; ++a)
        for (int bb = 0; bb < e2; ++bb) {
            int cnt = count[a * e2 + bb];
            bool ok = (mode == CoverMode::Partition) ? cnt == 1 : cnt % 2 == 1;
            if (!ok) return {false, std::pair{a, bb}};
        }
    return {};
}

ProductCover star_construction(int n) {
    if (n < 2) throw std::invalid_argument("star construction needs n >= 2");
    ProductCover c;
    c.n1 = c.n2 = n;
    std::vector<std::pair<uint32_t, uint32_t>> stars;
    for (int i = 0; i < n - 1; ++i) {
        uint32_t centre = uint32_t(1) << i;
        uint32_t leaves = 0;
        for (int j = i + 1; j < n; ++j) leaves |= uint32_t(1) << j;
        stars.emplace_back(centre, leaves);
    }
    for (const auto& s1 : stars)
        for (const auto& s2 : stars) c.blocks.push_back({s1.first, s1.second, s2.first, s2.second});
    return c;
}

std::vector<std::pair<uint32_t, uint32_t>> all_bipartite_subgraphs(int n) {
    // unordered {X, Y}: the lowest vertex of X cup Y sits in X
    std::vector<std::pair<uint32_t, uint32_t>> out;
    uint32_t full = (uint32_t(1) << n) - 1;
    for (uint32_t x = 1; x <= full; ++x) {
        uint32_t comp = full & ~x;
        for (uint32_t y = comp; y > 0; y = (y - 1) & comp)
            if (std::countr_zero(x) < std::countr_zero(y)) out.emplace_back(x, y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<int>> perms_fixing_edge01(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if ((p[0] == 0 && p[1] == 1) || (p[0] == 1 && p[1] == 0)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

uint32_t apply_perm_mask(const std::vector<int>& p, uint32_t mask) {
    uint32_t out = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint32_t(1) << p[v];
    }
    return out;
}

ProductBlock normalise_block(ProductBlock b) {
    if (std::countr_zero(b.x1) > std::countr_zero(b.y1)) std::swap(b.x1, b.y1);
    if (std::countr_zero(b.x2) > std::countr_zero(b.y2)) std::swap(b.x2, b.y2);
    return b;
}

std::array<uint32_t, 4> block_key(const ProductBlock& b) { return {b.x1, b.y1, b.x2, b.y2}; }

}  // namespace

ProductExactResult exact_product_value(ProductTarget target, int n, const SearchBudget& budget) {
    int n1, n2;
    CoverMode mode;
    switch (target) {
        case ProductTarget::G:
            if (n < 2 || n > 4) throw std::invalid_argument("g(n) exact search supports 2 <= n <= 4");
            n1 = n2 = n;
            mode = CoverMode::Partition;
            break;
        case ProductTarget::H:
            if (n < 2 || n > 5) throw std::invalid_argument("h(n) exact search supports 2 <= n <= 5");
            n1 = 4;
            n2 = n;
            mode = CoverMode::Partition;
            break;
        case ProductTarget::GTilde:
            if (n < 2 || n > 3) throw std::invalid_argument("g~(n) exact search supports 2 <= n <= 3");
            n1 = n2 = n;
            mode = CoverMode::Odd;
            break;
    }

    ProductCover shape;
    shape.n1 = n1;
    shape.n2 = n2;
    auto left = all_bipartite_subgraphs(n1);
    auto right = all_bipartite_subgraphs(n2);
    std::vector<ProductBlock> blocks;
    for (const auto& l : left)
        for (const auto& r : right) blocks.push_back({l.first, l.second, r.first, r.second});

    ExactCoverInstance inst;
    inst.universe = pair_count(n1) * pair_count(n2);
    for (const auto& b : blocks) inst.blocks.push_back(block_elements(shape, b));

    std::optional<RootRestriction> root;
    if (mode == CoverMode::Partition) {
        // element 0 is (edge {0,1}, edge {0,1}); reduce its covering blocks to
        // orbit representatives under the stabiliser of that element
        auto p1 = perms_fixing_edge01(n1);
        auto p2 = perms_fixing_edge01(n2);
        RootRestriction rr;
        rr.element = 0;
        for (size_t idx = 0; idx < blocks.size(); ++idx) {
            const auto& els = inst.blocks[idx];
            if (!std::binary_search(els.begin(), els.end(), 0)) continue;
            std::array<uint32_t, 4> canon = block_key(normalise_block(blocks[idx]));
            for (const auto& s1 : p1)
                for (const auto& s2 : p2) {
                    ProductBlock img{apply_perm_mask(s1, blocks[idx].x1),
                                     apply_perm_mask(s1, blocks[idx].y1),
                                     apply_perm_mask(s2, blocks[idx].x2),
                                     apply_perm_mask(s2, blocks[idx].y2)};
                    canon = std::min(canon, block_key(normalise_block(img)));
                }
            if (canon == block_key(normalise_block(blocks[idx]))) rr.blocks.push_back(int(idx));
        }
        root = rr;
    }

    CoverResult cover = exact_cover_min(inst, mode, budget, root);

    ProductExactResult res;
    res.outcome = cover.outcome;
    res.value = cover.count;
    res.witness.n1 = n1;
    res.witness.n2 = n2;
    for (int idx : cover.chosen) res.witness.blocks.push_back(blocks[idx]);
    if (cover.outcome != Outcome::Infeasible && !cover.chosen.empty()) {
        auto check = check_product_cover(res.witness, mode);
        if (!check.ok) throw std::logic_error("exact_product_value produced an invalid cover");
    }
    return res;
}

std::vector<BoundRow> bound_table(int n_lo, int n_hi) {
    std::vector<BoundRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        BoundRow row;
        row.n = n;
        row.star_bound = BigInt(n - 1) * (n - 1);
        long half_up = (n + 1) / 2;
        row.odd_cover_bound = BigInt(half_up + 1) * (half_up + 1);
        row.h_slope = Rational(12 * n, 5);
        rows.push_back(row);
    }
    return rows;
}

std::string block_to_string(const ProductBlock& b) {
    auto side = [](uint32_t m) {
        std::string s = "{";
        bool first = true;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (!first) s += ",";
            s += std::to_string(v + 1);
            first = false;
        }
        return s + "}";
    };
    return "(" + side(b.x1) + "|" + side(b.y1) + ")x(" + side(b.x2) + "|" + side(b.y2) + ")";
}

// ---------------- certificates ----------------

namespace {

nlohmann::json cover_witness(const ProductCover& c) {
    std::vector<std::string> blocks;
    for (const auto& b : c.blocks) blocks.push_back(block_to_string(b));
    std::sort(blocks.begin(), blocks.end());
    return nlohmann::json{{"blocks", blocks}, {"n1", c.n1}, {"n2", c.n2}};
}

uint32_t parse_vertex_set(const std::string& s, size_t& pos) {
    if (s[pos] != '{') throw std::invalid_argument("expected '{'");
    ++pos;
    uint32_t mask = 0;
    while (s[pos] != '}') {
        size_t next = s.find_first_of(",}", pos);
        mask |= uint32_t(1) << (std::stoi(s.substr(pos, next - pos)) - 1);
        pos = next + (s[next] == ',' ? 1 : 0);
    }
    ++pos;
    return mask;
}

ProductCover cover_from_witness(const nlohmann::json& w) {
    ProductCover c;
    c.n1 = w.at("n1").get<int>();
    c.n2 = w.at("n2").get<int>();
    for (const auto& j : w.at("blocks")) {
        std::string s = j.get<std::string>();
        ProductBlock b;
        size_t pos = 1;  // skip '('
        b.x1 = parse_vertex_set(s, pos);
        ++pos;  // '|'
        b.y1 = parse_vertex_set(s, pos);
        pos += 3;  // ')x('
        b.x2 = parse_vertex_set(s, pos);
        ++pos;  // '|'
        b.y2 = parse_vertex_set(s, pos);
        c.blocks.push_back(b);
    }
    return c;
}

const char* target_name(ProductTarget t) {
    switch (t) {
        case ProductTarget::G: return "g";
        case ProductTarget::H: return "h";
        case ProductTarget::GTilde: return "g-tilde";
    }
    return "?";
}

}  // namespace

Certificate make_star_certificate(int n) {
    ProductCover c = star_construction(n);
    auto check = check_product_cover(c, CoverMode::Partition);
    Certificate cert = make_certificate("product-cover/star", {{"n", std::to_string(n)}},
                                        "construction", std::to_string(c.blocks.size()),
                                        cover_witness(c));
    cert.witness["partition_ok"] = check.ok;
    return cert;
}

Certificate make_product_exact_certificate(ProductTarget target, int n,
                                           const ProductExactResult& r) {
    Certificate c = make_certificate(
        "product-cover/exact",
        {{"target", target_name(target)}, {"n", std::to_string(n)}},
        r.outcome == Outcome::Proven ? "exact" : "bound", std::to_string(r.value),
        cover_witness(r.witness));
    return c;
}

void register_product_partitions_verifiers(VerifierRegistry& reg) {
    reg.add("product-cover/star", [](const Certificate& cert) -> VerifyResult {
        int n = std::stoi(cert.params.at("n"));
        ProductCover c = cover_from_witness(cert.witness);
        if (c.n1 != n || c.n2 != n) return {false, "size parameters mismatch"};
        if (std::to_string(c.blocks.size()) != cert.value) return {false, "block count mismatch"};
        if ((long long)c.blocks.size() != (long long)(n - 1) * (n - 1))
            return {false, "not (n-1)^2 blocks"};
        auto check = check_product_cover(c, CoverMode::Partition);
        if (!check.ok) return {false, "blocks do not partition the product"};
        return {true, "star partition verified"};
    });

    reg.add("product-cover/exact", [](const Certificate& cert) -> VerifyResult {
        std::string target = cert.params.at("target");
        int n = std::stoi(cert.params.at("n"));
        ProductCover c = cover_from_witness(cert.witness);
        if (std::to_string(c.blocks.size()) != cert.value) return {false, "block count mismatch"};
        CoverMode mode = (target == "g-tilde") ? CoverMode::Odd : CoverMode::Partition;
        auto check = check_product_cover(c, mode);
        if (!check.ok) return {false, "witness cover invalid"};
        if (target == "g" && std::stoll(cert.value) > (long long)(n - 1) * (n - 1))
            return {false, "value exceeds the star bound"};
        return {true, "witness cover attains the stated count"};
    });
}

}  // namespace combex
