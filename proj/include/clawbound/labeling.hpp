#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clawbound/decomposition.hpp"
#include "clawbound/domination.hpp"
#include "clawbound/errors.hpp"
#include "clawbound/graph.hpp"
#include "clawbound/vertex_set.hpp"

namespace clawbound {

// Label carried by a D-vertex: one gamma position, or an unordered pair.
struct Label {
    int a = -1, b = -1;  // singleton: b < 0; pair: a < b

    static Label one(int i) { return Label{i, -1}; }
    static Label pair(int i, int j) {
        if (i == j) throw input_error("Label: pair with equal positions");
        return i < j ? Label{i, j} : Label{j, i};
    }
    bool is_pair() const { return b >= 0; }
    bool contains(int i) const { return a == i || b == i; }
    IndexMask mask() const { return is_pair() ? (index_bit(a) | index_bit(b)) : index_bit(a); }
    int other(int i) const {
        if (!is_pair() || !contains(i)) throw internal_error("Label::other misuse");
        return a == i ? b : a;
    }
    std::string to_string() const {
        return is_pair() ? "(" + std::to_string(a) + "," + std::to_string(b) + ")"
                         : std::to_string(a);
    }
    bool operator==(const Label& o) const = default;
};

enum class LabelStage { L1, L2, L3 };

// Labels keyed by flat product index; map order is fiber-major, which is
// exactly the fixed processing order of the passes.
struct LabelState {
    LabelStage stage = LabelStage::L1;
    std::map<int, Label> labels;

    int pair_count() const {
        int c = 0;
        for (const auto& [v, l] : labels) c += l.is_pair() ? 1 : 0;
        return c;
    }
};

struct Violation {
    std::string check;
    bool critical = true;
    std::string detail;
};

namespace detail {
inline void report(std::vector<Violation>* sink, const std::string& check, bool critical,
                   const std::string& detail) {
    if (sink)
        sink->push_back({check, critical, detail});
    else if (critical)
        throw critical_finding(check + ": " + detail);
}
}  // namespace detail

using ShuffleRng = std::mt19937_64;

// Everything the labeling passes share for one (G, Γ, H, D) instance.
struct ProductContext {
    Graph G, H, product;
    ProductIndexMap pm;
    CellDecomposition dec;
    VertexSet D;
    std::vector<VertexSet> fiber_d;  // per h: {g : (g,h) in D}

    int flat(int g, int h) const { return pm.flat(g, h); }
};

inline ProductContext make_context(const Graph& G, const std::vector<int>& gamma, const Graph& H,
                                   const VertexSet& D) {
    ProductContext ctx;
    ctx.G = G;
    ctx.H = H;
    auto [prod, pm] = cartesian_product(G, H);
    ctx.product = std::move(prod);
    ctx.pm = pm;
    if (D.universe_size() != ctx.product.vertex_count())
        throw input_error("make_context: D universe does not match the product order");
    ctx.dec = decompose(G, gamma);
    ctx.D = D;
    ctx.fiber_d.assign(static_cast<std::size_t>(pm.nh), VertexSet(pm.ng));
    D.for_each([&](int p) {
        auto [g, h] = pm.unflat(p);
        ctx.fiber_d[static_cast<std::size_t>(h)].set(g);
    });
    return ctx;
}

// Per fiber h: which gamma cells have no D-vertex anywhere in their column
// over N_H[h], plus the per-vertex form of the same predicate.
struct VerticalTable {
    std::vector<IndexMask> undominated_cells;  // I_h
    std::vector<VertexSet> column_hits;        // {g : D ∩ ({g} × N_H[h]) nonempty}

    bool vertex_vertically_dominated(int g, int h) const {
        return column_hits[static_cast<std::size_t>(h)].test(g);
    }
};

inline VerticalTable classify_vertical(const ProductContext& ctx) {
    if (!is_dominating_set(ctx.product, ctx.D)) {
        VertexSet covered(ctx.product.vertex_count());
        ctx.D.for_each([&](int p) { covered |= closed_neighborhood(ctx.product, p); });
        const int missing = (VertexSet::full(ctx.product.vertex_count()) - covered).first();
        throw input_error("classify_vertical: D does not dominate the product, vertex " +
                          std::to_string(missing) + " uncovered");
    }
    const int k = ctx.dec.k();
    VerticalTable vt;
    vt.undominated_cells.assign(static_cast<std::size_t>(ctx.pm.nh), 0);
    vt.column_hits.assign(static_cast<std::size_t>(ctx.pm.nh), VertexSet(ctx.pm.ng));
    for (int h = 0; h < ctx.pm.nh; ++h) {
        VertexSet hits = ctx.fiber_d[static_cast<std::size_t>(h)];
        ctx.H.neighbors(h).for_each(
            [&](int h2) { hits |= ctx.fiber_d[static_cast<std::size_t>(h2)]; });
        vt.column_hits[static_cast<std::size_t>(h)] = hits;
        IndexMask undom = 0;
        for (int i = 0; i < k; ++i)
            if (!ctx.dec.cell(i).intersects(hits)) undom |= index_bit(i);
        vt.undominated_cells[static_cast<std::size_t>(h)] = undom;
    }
    return vt;
}

namespace detail {
template <typename T>
inline const T& pick(const std::vector<T>& options, ShuffleRng* rng) {
    if (rng && options.size() > 1) {
        std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
        return options[d(*rng)];
    }
    return options.front();
}
}  // namespace detail

// Stage 1: label every D-vertex from its cell / shared-class position and the
// vertical table of its fiber.
inline LabelState labeling1(const ProductContext& ctx, const VerticalTable& vt,
                            ShuffleRng* rng = nullptr) {
    LabelState st;
    st.stage = LabelStage::L1;
    ctx.D.for_each([&](int p) {
        auto [g, h] = ctx.pm.unflat(p);
        const IndexMask m = ctx.dec.vertex_mask[static_cast<std::size_t>(g)];
        const int pc = std::popcount(m);
        if (pc == 1) {
            st.labels.emplace(p, Label::one(std::countr_zero(m)));
            return;
        }
        if (pc != 2)
            throw internal_error("labeling1: D-vertex " + std::to_string(p) +
                                 " lies in a shared class with " + std::to_string(pc) +
                                 " indices; claw-free precondition broken upstream");
        const auto idx = mask_to_indices(m);
        const int j1 = idx[0], j2 = idx[1];
        const IndexMask undom = vt.undominated_cells[static_cast<std::size_t>(h)];
        const bool u1 = (undom & index_bit(j1)) != 0;
        const bool u2 = (undom & index_bit(j2)) != 0;
        if (u1 && u2) {
            st.labels.emplace(p, Label::pair(j1, j2));
        } else if (u1 || u2) {
            st.labels.emplace(p, Label::one(u1 ? j1 : j2));
        } else {
            // both cells vertically dominated: the choice is arbitrary
            const std::vector<int> opts{j1, j2};
            st.labels.emplace(p, Label::one(detail::pick(opts, rng)));
        }
    });
    return st;
}

// Stage 2: a paired vertex looks for a same-class D-vertex in an adjacent
// fiber and the two split the pair into singletons.  Single pass; labels are
// read live, and the witness scope is adjacent fibers only, which is also
// exactly what the post-pass assertion and the later claims rely on.
inline LabelState labeling2(LabelState st, const ProductContext& ctx,
                            std::vector<Violation>* sink = nullptr, ShuffleRng* rng = nullptr) {
    if (st.stage != LabelStage::L1) throw input_error("labeling2: expected an L1 state");

    std::vector<int> order;
    order.reserve(st.labels.size());
    for (const auto& [p, l] : st.labels) order.push_back(p);
    if (rng) std::shuffle(order.begin(), order.end(), *rng);

    for (int p : order) {
        Label& lv = st.labels.at(p);
        if (!lv.is_pair()) continue;
        auto [g, h] = ctx.pm.unflat(p);
        const IndexMask class_mask = lv.mask();
        std::vector<int> witnesses;
        ctx.H.neighbors(h).for_each([&](int h2) {
            ctx.fiber_d[static_cast<std::size_t>(h2)].for_each([&](int g2) {
                if (ctx.dec.vertex_mask[static_cast<std::size_t>(g2)] == class_mask)
                    witnesses.push_back(ctx.flat(g2, h2));
            });
        });
        if (witnesses.empty()) continue;
        const int y = detail::pick(witnesses, rng);
        Label& ly = st.labels.at(y);
        if (ly.is_pair()) {
            if (ly != lv)
                throw internal_error("labeling2: witness pair label differs from its class");
            // split the pair across v and y
            bool v_takes_min = true;
            if (rng) v_takes_min = ((*rng)() & 1) != 0;
            const int lo = lv.a, hi = lv.b;
            lv = Label::one(v_takes_min ? lo : hi);
            ly = Label::one(v_takes_min ? hi : lo);
        } else {
            if (!lv.contains(ly.a))
                throw internal_error("labeling2: witness singleton outside the pair");
            lv = Label::one(lv.other(ly.a));
        }
    }
    st.stage = LabelStage::L2;

    // post-state: a surviving pair has no same-class D-vertex in any adjacent fiber
    for (const auto& [p, l] : st.labels) {
        if (!l.is_pair()) continue;
        auto [g, h] = ctx.pm.unflat(p);
        bool clean = true;
        ctx.H.neighbors(h).for_each([&](int h2) {
            ctx.fiber_d[static_cast<std::size_t>(h2)].for_each([&](int g2) {
                if (ctx.dec.vertex_mask[static_cast<std::size_t>(g2)] == l.mask()) clean = false;
            });
        });
        if (!clean)
            detail::report(sink, "post_l2_witness_free", true,
                           "vertex " + std::to_string(p) + " keeps pair " + l.to_string() +
                               " despite an adjacent-fiber witness");
    }
    return st;
}

// Stage 3: within each fiber, reduce interacting labels to a fixpoint.
//   R1  two identical pairs (a,b)            -> One(a), One(b)
//   R2  pairs sharing exactly one position   -> the later one keeps its other position
//   R3  singleton a + pair containing a      -> the pair keeps its other position
inline LabelState labeling3(LabelState st, const ProductContext& ctx, ShuffleRng* rng = nullptr) {
    if (st.stage != LabelStage::L2) throw input_error("labeling3: expected an L2 state");

    for (int h = 0; h < ctx.pm.nh; ++h) {
        std::vector<int> fiber;
        ctx.fiber_d[static_cast<std::size_t>(h)].for_each(
            [&](int g) { fiber.push_back(ctx.flat(g, h)); });
        if (fiber.size() < 2) continue;

        struct App {
            int rule;  // 1, 2, 3
            int x, y;  // flat indices; rules act on y (and x for R1)
        };
        auto find_apps = [&](bool first_only) {
            std::vector<App> apps;
            for (std::size_t i = 0; i < fiber.size(); ++i)
                for (std::size_t j = 0; j < fiber.size(); ++j) {
                    if (i == j) continue;
                    const int x = fiber[i], y = fiber[j];
                    const Label lx = st.labels.at(x), ly = st.labels.at(y);
                    if (lx.is_pair() && ly.is_pair()) {
                        if (j < i) continue;  // unordered; keep (earlier, later)
                        if (lx == ly)
                            apps.push_back({1, x, y});
                        else if (std::popcount(lx.mask() & ly.mask()) == 1)
                            apps.push_back({2, x, y});
                    } else if (!lx.is_pair() && ly.is_pair() && ly.contains(lx.a)) {
                        apps.push_back({3, x, y});
                    }
                    if (first_only && !apps.empty()) return apps;
                }
            return apps;
        };

        int guard = st.pair_count() + 2;
        while (true) {
            std::vector<App> apps = find_apps(/*first_only=*/rng == nullptr);
            if (apps.empty()) break;
            if (--guard < 0) throw internal_error("labeling3: fixpoint iteration diverged");
            App a = apps.front();
            if (rng) {
                std::uniform_int_distribution<std::size_t> d(0, apps.size() - 1);
                a = apps[d(*rng)];
                if (a.rule != 3 && ((*rng)() & 1)) std::swap(a.x, a.y);
            }
            Label& lx = st.labels.at(a.x);
            Label& ly = st.labels.at(a.y);
            switch (a.rule) {
                case 1:
                    ly = Label::one(lx.b);
                    lx = Label::one(lx.a);
                    break;
                case 2: {
                    const int shared = std::countr_zero(lx.mask() & ly.mask());
                    ly = Label::one(ly.other(shared));
                    break;
                }
                default:
                    ly = Label::one(ly.other(lx.a));
                    break;
            }
        }
    }
    st.stage = LabelStage::L3;
    return st;
}

// Invariants every stage must preserve: exactly the D-vertices carry labels,
// and each label only mentions positions from its vertex's own class.
inline void check_label_invariants(const ProductContext& ctx, const LabelState& st,
                                   const std::string& stage_tag,
                                   std::vector<Violation>* sink = nullptr) {
    int d_size = ctx.D.count();
    if (static_cast<int>(st.labels.size()) != d_size)
        detail::report(sink, "label_totality", true,
                       stage_tag + ": " + std::to_string(st.labels.size()) + " labels for " +
                           std::to_string(d_size) + " D-vertices");
    for (const auto& [p, l] : st.labels) {
        if (!ctx.D.test(p)) {
            detail::report(sink, "label_totality", true,
                           stage_tag + ": label on non-D vertex " + std::to_string(p));
            continue;
        }
        auto [g, h] = ctx.pm.unflat(p);
        const IndexMask allowed = ctx.dec.vertex_mask[static_cast<std::size_t>(g)];
        if ((l.mask() & ~allowed) != 0)
            detail::report(sink, "label_subset", true,
                           stage_tag + ": vertex " + std::to_string(p) + " labeled " +
                               l.to_string() + " outside its class {" + mask_to_string(allowed) +
                               "}");
    }
}

// Fixpoint shape after stage 3: inside a fiber, surviving pairs are pairwise
// disjoint and share no position with any singleton.
inline void check_post_l3(const ProductContext& ctx, const LabelState& st,
                          std::vector<Violation>* sink = nullptr) {
    if (st.stage != LabelStage::L3) throw input_error("check_post_l3: expected an L3 state");
    for (int h = 0; h < ctx.pm.nh; ++h) {
        IndexMask pair_union = 0, singleton_union = 0;
        bool overlap = false;
        ctx.fiber_d[static_cast<std::size_t>(h)].for_each([&](int g) {
            const Label l = st.labels.at(ctx.flat(g, h));
            if (l.is_pair()) {
                if (pair_union & l.mask()) overlap = true;
                pair_union |= l.mask();
            } else {
                singleton_union |= l.mask();
            }
        });
        if (overlap || (pair_union & singleton_union))
            detail::report(sink, "post_l3_fixpoint", true,
                           "fiber " + std::to_string(h) + ": labels still interact");
    }
}

// Per-fiber bookkeeping derived from the final label state.
struct FiberTrace {
    int h = 0;
    IndexMask undominated = 0;    // I_h
    IndexMask dominated_idx = 0;  // complement within [k]
    std::vector<int> s1;          // pair-labeled D-vertices of the fiber (flat)
    IndexMask j1 = 0;             // union of surviving pair positions
    std::vector<int> e_set;       // chosen completion vertices (flat)
    bool e_feasible = true;
    bool nh_empty = true;             // D ∩ N_H(chamber at h) recorded empty
    bool e_private_singletons = true; // every E-member: singleton-labeled private neighbor
    bool claim2_ok = true;            // |E| >= |S1|
};

inline std::vector<FiberTrace> fiber_sets(const ProductContext& ctx, const LabelState& st,
                                          const VerticalTable& vt,
                                          std::vector<Violation>* sink = nullptr) {
    if (st.stage != LabelStage::L3) throw input_error("fiber_sets: expected an L3 state");
    const IndexMask full_k =
        ctx.dec.k() == 62 ? ~IndexMask{0} >> 2 : (index_bit(ctx.dec.k()) - 1);
    std::vector<FiberTrace> out;
    out.reserve(static_cast<std::size_t>(ctx.pm.nh));
    for (int h = 0; h < ctx.pm.nh; ++h) {
        FiberTrace ft;
        ft.h = h;
        ft.undominated = vt.undominated_cells[static_cast<std::size_t>(h)];
        ft.dominated_idx = full_k & ~ft.undominated;
        const VertexSet ch = chamber(ctx.dec, ft.undominated);
        ctx.fiber_d[static_cast<std::size_t>(h)].for_each([&](int g) {
            const int p = ctx.flat(g, h);
            const Label l = st.labels.at(p);
            if (!l.is_pair()) return;
            ft.s1.push_back(p);
            ft.j1 |= l.mask();
            if (!ch.test(g))
                detail::report(sink, "fiber_s1_chamber", true,
                               "fiber " + std::to_string(h) + ": paired vertex " +
                                   std::to_string(p) + " outside the undominated chamber");
        });
        if (std::popcount(ft.j1) != 2 * static_cast<int>(ft.s1.size()))
            detail::report(sink, "fiber_j1_size", true,
                           "fiber " + std::to_string(h) + ": |J1| != 2|S1|");
        if ((ft.j1 & ~ft.undominated) != 0)
            detail::report(sink, "fiber_j1_subset", true,
                           "fiber " + std::to_string(h) + ": J1 not within I_h");
        out.push_back(std::move(ft));
    }
    return out;
}

// Minimum completion E ⊆ D^h ∩ C(I1) so that D-vertices inside the J1-chamber
// plus D-vertices vertically adjacent to it plus E dominate the chamber copy.
inline void compute_E_set(const ProductContext& ctx, const LabelState& st, FiberTrace& ft,
                          std::vector<Violation>* sink = nullptr) {
    ft.e_set.clear();
    ft.e_feasible = true;
    ft.nh_empty = true;
    ft.e_private_singletons = true;
    ft.claim2_ok = true;
    if (ft.j1 == 0) return;  // nothing undominated-and-paired to complete

    const int h = ft.h;
    const VertexSet cj = chamber(ctx.dec, ft.j1);
    VertexSet covered(ctx.product.vertex_count());
    // given dominators: D inside the chamber copy ...
    cj.for_each([&](int g) {
        if (ctx.fiber_d[static_cast<std::size_t>(h)].test(g))
            covered |= closed_neighborhood(ctx.product, ctx.flat(g, h));
    });
    // ... and D on the chamber's columns in adjacent fibers
    ctx.H.neighbors(h).for_each([&](int h2) {
        VertexSet vert = cj & ctx.fiber_d[static_cast<std::size_t>(h2)];
        if (!vert.empty()) ft.nh_empty = false;
        vert.for_each(
            [&](int g) { covered |= closed_neighborhood(ctx.product, ctx.flat(g, h2)); });
    });
    if (!ft.nh_empty)
        detail::report(sink, "post_l2_nh_chamber_nonempty", false,
                       "fiber " + std::to_string(h) +
                           ": D meets the J1-chamber columns in an adjacent fiber");

    VertexSet universe(ctx.product.vertex_count());
    cj.for_each([&](int g) {
        const int p = ctx.flat(g, h);
        if (!covered.test(p)) universe.set(p);
    });

    std::vector<int> cands;
    chamber(ctx.dec, ft.dominated_idx).for_each([&](int g) {
        if (ctx.fiber_d[static_cast<std::size_t>(h)].test(g)) cands.push_back(ctx.flat(g, h));
    });

    if (!universe.empty()) {
        VertexSet reach(ctx.product.vertex_count());
        for (int c : cands) reach |= closed_neighborhood(ctx.product, c);
        if (!reach.contains_all(universe)) {
            ft.e_feasible = false;
            detail::report(sink, "e_set_infeasible", true,
                           "fiber " + std::to_string(h) +
                               ": no completion inside the dominated chamber covers vertex " +
                               std::to_string((universe - reach).first()));
        }
    }

    if (ft.e_feasible && !universe.empty()) {
        // exact minimum cover, smallest size first, lexicographic within a size
        const int nc = static_cast<int>(cands.size());
        bool done = false;
        for (int size = 1; size <= nc && !done; ++size) {
            std::vector<int> comb(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i;
            while (true) {
                VertexSet cov(ctx.product.vertex_count());
                for (int ci : comb)
                    cov |= closed_neighborhood(ctx.product,
                                               cands[static_cast<std::size_t>(ci)]);
                if (cov.contains_all(universe)) {
                    for (int ci : comb) ft.e_set.push_back(cands[static_cast<std::size_t>(ci)]);
                    done = true;
                    break;
                }
                int i = size - 1;
                while (i >= 0 && comb[static_cast<std::size_t>(i)] == nc - size + i) --i;
                if (i < 0) break;
                ++comb[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < size; ++j)
                    comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        if (!done && !universe.empty())
            throw internal_error("compute_E_set: feasible instance produced no cover");
    }

    for (int e : ft.e_set) {
        auto [g, h2] = ctx.pm.unflat(e);
        const IndexMask m = ctx.dec.vertex_mask[static_cast<std::size_t>(g)];
        const bool private_member = !ctx.dec.in_gamma(g) && std::popcount(m) == 1 &&
                                    (m & ft.dominated_idx) == m;
        const bool singleton = !st.labels.at(e).is_pair();
        if (!(private_member && singleton)) {
            ft.e_private_singletons = false;
            detail::report(sink, "e_member_not_private_singleton", false,
                           "fiber " + std::to_string(h) + ": completion vertex " +
                               std::to_string(e) + " is not a singleton-labeled private neighbor");
        }
    }

    if (ft.e_feasible && static_cast<int>(ft.e_set.size()) < static_cast<int>(ft.s1.size())) {
        ft.claim2_ok = false;
        detail::report(sink, "claim2_e_ge_s1", true,
                       "fiber " + std::to_string(h) + ": |E|=" + std::to_string(ft.e_set.size()) +
                           " < |S1|=" + std::to_string(ft.s1.size()));
    }
}

// Outcome of one full pipeline run over a single minimum dominating set D.
struct ProofTrace {
    int k = 0;
    int gamma_h = 0;
    std::vector<int> d;
    std::map<int, Label> labels;
    std::vector<FiberTrace> fibers;
    std::vector<std::vector<int>> label_classes;  // D_i per gamma position
    std::vector<bool> projection_ok;
    long long sum_label_classes = 0;
    long long d_size = 0;
    long long pair_total = 0;
    bool counting_identity_ok = true;  // Σ|D_i| == |D| + Σ|S1_h|
    bool sum_lower_ok = true;          // Σ|D_i| >= k·γ(H)
    bool sum_upper_ok = true;          // 2·Σ|D_i| <= 3·|D|
    std::vector<Violation> violations;

    bool has_critical() const {
        for (const auto& v : violations)
            if (v.critical) return true;
        return false;
    }
};

// Final accounting: label classes project onto dominating sets of H, and the
// overcount identity plus the sandwich inequalities hold exactly.
inline ProofTrace verify_claims(const ProductContext& ctx, const LabelState& st,
                                const std::vector<FiberTrace>& fibers, int gamma_h,
                                std::vector<Violation>* sink = nullptr) {
    if (st.stage != LabelStage::L3) throw input_error("verify_claims: expected an L3 state");
    const int k = ctx.dec.k();
    ProofTrace t;
    t.k = k;
    t.gamma_h = gamma_h;
    t.d = ctx.D.to_vector();
    t.labels = st.labels;
    t.fibers = fibers;
    t.d_size = ctx.D.count();

    t.label_classes.assign(static_cast<std::size_t>(k), {});
    for (const auto& [p, l] : st.labels) {
        if (l.a < 0 || l.a >= k || (l.is_pair() && l.b >= k))
            throw input_error("verify_claims: label " + l.to_string() + " on vertex " +
                              std::to_string(p) + " outside the gamma positions");
        t.label_classes[static_cast<std::size_t>(l.a)].push_back(p);
        if (l.is_pair()) t.label_classes[static_cast<std::size_t>(l.b)].push_back(p);
    }
    t.projection_ok.assign(static_cast<std::size_t>(k), true);
    for (int i = 0; i < k; ++i) {
        VertexSet proj(ctx.pm.nh);
        for (int p : t.label_classes[static_cast<std::size_t>(i)]) proj.set(ctx.pm.unflat(p).second);
        const bool ok = !proj.empty() && is_dominating_set(ctx.H, proj);
        t.projection_ok[static_cast<std::size_t>(i)] = ok;
        if (!ok)
            detail::report(sink, "claim3_projection_dominates", true,
                           "label class " + std::to_string(i) +
                               " does not project onto a dominating set of H");
        if (static_cast<int>(t.label_classes[static_cast<std::size_t>(i)].size()) < gamma_h)
            detail::report(sink, "claim3_class_size", true,
                           "label class " + std::to_string(i) + " smaller than gamma(H)");
        t.sum_label_classes +=
            static_cast<long long>(t.label_classes[static_cast<std::size_t>(i)].size());
    }
    for (const auto& f : fibers) t.pair_total += static_cast<long long>(f.s1.size());

    t.counting_identity_ok = t.sum_label_classes == t.d_size + t.pair_total;
    if (!t.counting_identity_ok)
        detail::report(sink, "counting_identity", true,
                       "sum |D_i| = " + std::to_string(t.sum_label_classes) + " but |D| + pairs = " +
                           std::to_string(t.d_size + t.pair_total));
    t.sum_lower_ok = t.sum_label_classes >= static_cast<long long>(k) * gamma_h;
    if (!t.sum_lower_ok)
        detail::report(sink, "sum_lower_bound", true,
                       "sum |D_i| below gamma(G)*gamma(H)");
    t.sum_upper_ok = 2 * t.sum_label_classes <= 3 * t.d_size;
    if (!t.sum_upper_ok)
        detail::report(sink, "sum_upper_bound", true, "2*sum |D_i| exceeds 3*|D|");
    return t;
}

struct PipelineOptions {
    std::optional<std::uint64_t> shuffle_seed;  // randomize the "any order" steps
};

// Full run: vertical classification, the three labeling passes with their
// stage invariants, fiber sets, completions, and the final claim checks.
inline ProofTrace run_pipeline(const Graph& G, const std::vector<int>& gamma, const Graph& H,
                               const VertexSet& D, const PipelineOptions& opts = {}) {
    ProductContext ctx = make_context(G, gamma, H, D);
    std::vector<Violation> vio;
    ShuffleRng rng_store;
    ShuffleRng* rng = nullptr;
    if (opts.shuffle_seed) {
        rng_store.seed(*opts.shuffle_seed);
        rng = &rng_store;
    }

    const VerticalTable vt = classify_vertical(ctx);
    LabelState st = labeling1(ctx, vt, rng);
    check_label_invariants(ctx, st, "L1", &vio);
    const int pairs_l1 = st.pair_count();

    st = labeling2(std::move(st), ctx, &vio, rng);
    check_label_invariants(ctx, st, "L2", &vio);
    const int pairs_l2 = st.pair_count();
    if (pairs_l2 > pairs_l1)
        vio.push_back({"pair_monotonic", true, "stage 2 increased the pair count"});

    st = labeling3(std::move(st), ctx, rng);
    check_label_invariants(ctx, st, "L3", &vio);
    if (st.pair_count() > pairs_l2)
        vio.push_back({"pair_monotonic", true, "stage 3 increased the pair count"});
    check_post_l3(ctx, st, &vio);

    std::vector<FiberTrace> fibers = fiber_sets(ctx, st, vt, &vio);
    for (FiberTrace& ft : fibers) compute_E_set(ctx, st, ft, &vio);

    const int gamma_h = domination_number(H).value;
    ProofTrace t = verify_claims(ctx, st, fibers, gamma_h, &vio);
    t.violations = std::move(vio);
    return t;
}

inline nlohmann::ordered_json proof_trace_to_json(const ProofTrace& t) {
    nlohmann::ordered_json j;
    j["k"] = t.k;
    j["gamma_h"] = t.gamma_h;
    j["d"] = t.d;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (const auto& [p, l] : t.labels) {
        if (l.is_pair())
            labels[std::to_string(p)] = std::vector<int>{l.a, l.b};
        else
            labels[std::to_string(p)] = std::vector<int>{l.a};
    }
    j["labels"] = std::move(labels);
    nlohmann::ordered_json fibers = nlohmann::ordered_json::array();
    for (const auto& f : t.fibers) {
        nlohmann::ordered_json fj;
        fj["h"] = f.h;
        fj["undominated_cells"] = mask_to_indices(f.undominated);
        fj["s1"] = f.s1;
        fj["j1"] = mask_to_indices(f.j1);
        fj["e_set"] = f.e_set;
        fj["e_feasible"] = f.e_feasible;
        fj["nh_empty"] = f.nh_empty;
        fj["e_private_singletons"] = f.e_private_singletons;
        fj["claim2_ok"] = f.claim2_ok;
        fibers.push_back(std::move(fj));
    }
    j["fibers"] = std::move(fibers);
    j["label_classes"] = t.label_classes;
    j["projection_ok"] = t.projection_ok;
    j["sum_label_classes"] = t.sum_label_classes;
    j["d_size"] = t.d_size;
    j["pair_total"] = t.pair_total;
    j["counting_identity_ok"] = t.counting_identity_ok;
    j["sum_lower_ok"] = t.sum_lower_ok;
    j["sum_upper_ok"] = t.sum_upper_ok;
    nlohmann::ordered_json vio = nlohmann::ordered_json::array();
    for (const auto& v : t.violations)
        vio.push_back({{"check", v.check}, {"critical", v.critical}, {"detail", v.detail}});
    j["violations"] = std::move(vio);
    return j;
}

}  // namespace clawbound
