#include "catalan/givental.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace catalan {

namespace {

const Qir& mat_entry(const Mat2<Qir>& m, int i, int j) {
    return i == 0 ? (j == 0 ? m.a : m.b) : (j == 0 ? m.c : m.d);
}

Mat2<Qir> eta_adjoint(const Mat2<Qir>& m) {
    return {m.d, m.b, m.c, m.a}; // eta^{-1} m^T eta for the antidiagonal metric
}

// ring shared by the frame-side and flat-side ancestor expansions; the two
// differ only in variable names, so the cap profile (and the VarId layout the
// linear caps index into) is identical. `loose` is a twin with the same
// numbering but no weight caps: substitution partials accumulate there so a
// window cannot clip a factor sequence whose completed product is admissible
struct ExpansionRing {
    RingPtr ring;
    RingPtr loose;
    std::array<std::vector<VarId>, 2> vars;
    VarId eps;
    int slot_family;
};

ExpansionRing make_expansion_ring(const GiventalPlan& plan, const std::string& stem1,
                                  const std::string& stem2) {
    auto ring = Ring::make();
    auto loose = Ring::make();
    ExpansionRing er;
    er.slot_family = ring->add_family("slot", plan.slot_cap);
    loose->add_family("slot", plan.slot_cap);
    int fam_eps = ring->add_family("eps");
    loose->add_family("eps");
    er.eps = ring->add_var("eps", fam_eps, plan.eps_window);
    loose->add_var("eps", fam_eps, plan.eps_window);
    const std::string stem[2] = {stem1, stem2};
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a <= plan.kdv_index; ++a) {
            er.vars[i].push_back(ring->add_var(stem[i] + "_" + std::to_string(a),
                                               er.slot_family, {0, plan.slot_cap}));
            loose->add_var(stem[i] + "_" + std::to_string(a), er.slot_family,
                           {0, plan.slot_cap});
        }
    er.loose = loose;

    // doubled weight 2w = sum 2(a-1) deg T_a - 3 deg eps. Tau-log terms sit
    // at 0; corrections live in [-2 weight_floor, 0]; the conjugation's
    // intermediate products (two first-derivative factors before the eps^2
    // prefactor) reach +4.
    LinearCap wcap;
    wcap.label = "doubled weight";
    wcap.weight.assign(ring->var_count(), 0);
    wcap.weight[er.eps] = -3;
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a <= plan.kdv_index; ++a) wcap.weight[er.vars[i][a]] = 2 * a - 2;
    wcap.lo = -2 * plan.weight_floor;
    wcap.hi = 4;
    ring->add_linear_cap(wcap);

    // joint budget 2w - slots: reaching a claimed monomial (slots <= n_max,
    // weight >= -weight_floor) costs at least one unit of weight per two
    // slots removed, so anything below this line is unreachable junk
    LinearCap jcap;
    jcap.label = "weight-slot budget";
    jcap.weight.assign(ring->var_count(), 0);
    jcap.weight[er.eps] = -3;
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a <= plan.kdv_index; ++a) jcap.weight[er.vars[i][a]] = 2 * a - 3;
    jcap.lo = -2 * plan.weight_floor - plan.n_max;
    ring->add_linear_cap(jcap);

    ring->set_genus_cap(plan.genus_max);
    ring->set_slot_cap(plan.n_max);
    er.ring = ring;
    return er;
}

TruncatedSeries prune_slots(const TruncatedSeries& f, int slot_family, int max_slots) {
    TruncatedSeries out(f.ring());
    const Ring& ring = *f.ring();
    for (const auto& [m, c] : f.terms())
        if (ring.family_degree(m, slot_family) <= max_slots) out.add_term(m, c);
    return out;
}

// rebuild in a ring with identical variable numbering, applying the
// destination's truncation
TruncatedSeries retag(const TruncatedSeries& f, const RingPtr& to) {
    TruncatedSeries out(to);
    for (const auto& [m, c] : f.terms()) out.add_term(m, c);
    return out;
}

// substitute images for every variable except the expansion parameter, whose
// (possibly negative) powers pass through unchanged; `scratch` must share the
// destination's numbering and carry no weight caps, so partial products are
// never clipped on their way to an admissible completed product
TruncatedSeries map_with_eps(const TruncatedSeries& f, VarId eps_src, const RingPtr& scratch,
                             VarId eps_dst, const std::vector<const TruncatedSeries*>& images,
                             const RingPtr& target) {
    TruncatedSeries out(scratch);
    std::vector<std::vector<TruncatedSeries>> powers(images.size());
    auto power_of = [&](VarId v, int e) -> const TruncatedSeries& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(TruncatedSeries::one(scratch));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * *images[v]);
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [m, c] : f.terms()) {
        TruncatedSeries acc =
            TruncatedSeries::term(scratch, Monomial::single(eps_dst, m.exponent(eps_src)), c);
        for (const auto& p : m.parts) {
            if (p.v == eps_src) continue;
            acc = acc * power_of(p.v, p.e);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return retag(out, target);
}

// precomputed data for one application of the conjugated correction operator
struct CorrectionData {
    std::vector<Mat2<Qir>> r; // r[l] used for l >= 1
    std::array<std::vector<TruncatedSeries>, 2> gd; // d(tau-log sum)/dT^i_a
    // second-derivative block of the conjugation: gd_i_a * gd_j_b + d2G
    std::map<std::tuple<int, int, int, int>, TruncatedSeries> second;
    Qir inv_delta[2];
    int order = 0; // highest r index with a nonzero matrix
};

bool is_zero_mat(const Mat2<Qir>& m) {
    return m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero();
}

CorrectionData make_correction_data(const ExpansionRing& er, const GiventalPlan& plan,
                                    const FrobeniusPoint& p, const std::vector<Mat2<Qir>>& r_log,
                                    const TruncatedSeries& G) {
    CorrectionData cd;
    cd.r = r_log;
    if (static_cast<int>(cd.r.size()) > plan.weight_floor + 1)
        cd.r.resize(static_cast<size_t>(plan.weight_floor) + 1);
    for (size_t l = 1; l < cd.r.size(); ++l)
        if (!is_zero_mat(cd.r[l])) cd.order = static_cast<int>(l);
    cd.inv_delta[0] = p.delta_root_1.inverse();
    cd.inv_delta[1] = p.delta_root_2.inverse();
    for (int i = 0; i < 2; ++i) {
        cd.gd[i].reserve(er.vars[i].size());
        for (VarId v : er.vars[i]) cd.gd[i].push_back(G.derivative(v));
    }
    for (int a = 0; a + 1 <= cd.order; ++a)
        for (int b = 0; a + b + 1 <= cd.order; ++b)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    if (mat_entry(cd.r[static_cast<size_t>(a + b + 1)], j, i).is_zero()) continue;
                    TruncatedSeries block = cd.gd[i][static_cast<size_t>(a)] *
                                            cd.gd[j][static_cast<size_t>(b)];
                    block += cd.gd[i][static_cast<size_t>(a)].derivative(
                        er.vars[j][static_cast<size_t>(b)]);
                    cd.second.emplace(std::make_tuple(i, a, j, b), std::move(block));
                }
    return cd;
}

// one application of e^{-G} (correction operator) e^{G} expanded by the
// product rule; each piece strictly lowers the weight grading
TruncatedSeries apply_correction(const ExpansionRing& er, const GiventalPlan& plan,
                                 const CorrectionData& cd, const TruncatedSeries& f) {
    TruncatedSeries out(er.ring);
    if (cd.order == 0) return out;

    // derivative and gd-product caches for this operand
    std::array<std::vector<TruncatedSeries>, 2> df, gf;
    for (int j = 0; j < 2; ++j) {
        df[j].reserve(er.vars[j].size());
        gf[j].reserve(er.vars[j].size());
        for (size_t a = 0; a < er.vars[j].size(); ++a) {
            df[j].push_back(f.derivative(er.vars[j][a]));
            gf[j].push_back(cd.gd[j][a] * f);
        }
    }

    const Monomial eps_sq = Monomial::single(er.eps, 2);
    for (int a = 0; a + 1 <= cd.order; ++a)
        for (int b = 0; a + b + 1 <= cd.order; ++b) {
            const Mat2<Qir>& rl = cd.r[static_cast<size_t>(a + b + 1)];
            const Rat half_sign = (a % 2 == 0) ? Rat(1, 2) : Rat(-1, 2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    // the Darboux expansion of the quadratic Hamiltonian pairs the
                    // row index of r with the second derivative slot
                    Qir cf = Qir(half_sign) * mat_entry(rl, j, i);
                    if (cf.is_zero()) continue;
                    TruncatedSeries piece =
                        df[i][static_cast<size_t>(a)].derivative(er.vars[j][static_cast<size_t>(b)]);
                    piece += cd.gd[i][static_cast<size_t>(a)] * df[j][static_cast<size_t>(b)];
                    piece += cd.gd[j][static_cast<size_t>(b)] * df[i][static_cast<size_t>(a)];
                    piece += cd.second.at(std::make_tuple(i, a, j, b)) * f;
                    out += piece.times_monomial(eps_sq, cf);
                }
        }

    for (int l = 1; l <= cd.order; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Qir& rji = mat_entry(cd.r[static_cast<size_t>(l)], j, i);
                if (rji.is_zero()) continue;
                // slot-shift piece: -T^i_a (r_l)^j_i d/dT^j_{a+l}
                for (int a = 0; a + l <= plan.kdv_index; ++a) {
                    TruncatedSeries piece = df[j][static_cast<size_t>(a + l)];
                    piece += gf[j][static_cast<size_t>(a + l)];
                    out += piece.times_monomial(Monomial::single(er.vars[i][static_cast<size_t>(a)], 1),
                                                -rji);
                }
                // dilaton-shift piece picked up by conjugating the slot shift
                // past the shifted variable: +Delta_i^{-1/2} (r_l)^j_i d/dT^j_{1+l}
                if (1 + l <= plan.kdv_index) {
                    TruncatedSeries piece = df[j][static_cast<size_t>(1 + l)];
                    piece += gf[j][static_cast<size_t>(1 + l)];
                    out += piece * (cd.inv_delta[i] * rji);
                }
            }
    return out;
}

} // namespace

GiventalPlan givental_plan(int genus_max, int n_max, int index_max) {
    if (genus_max < 0 || n_max < 1 || index_max < 0)
        throw std::invalid_argument("malformed extraction target");
    GiventalPlan plan;
    plan.genus_max = genus_max;
    plan.n_max = n_max;
    plan.index_max = index_max;
    plan.weight_floor = std::max(0, 3 * (genus_max - 1) + n_max);
    plan.slot_cap = n_max + 2 * plan.weight_floor;
    plan.kdv_index = index_max + plan.weight_floor;
    // the top stays at zero even for a pure genus-zero target: correction and
    // log intermediates transit through the eps^0 sector before cancelling
    plan.eps_window = {-2 - 2 * plan.weight_floor, std::max(0, 2 * genus_max - 2)};
    return plan;
}

AncestorFrame ancestor_potential_frame(const GiventalPlan& plan, const FrobeniusPoint& p,
                                       const std::vector<Mat2<Qir>>& r_log) {
    ExpansionRing er = make_expansion_ring(plan, "T1", "T2");

    TruncatedSeries G = kdv_tau_log(er.ring, er.vars[0], er.eps, p.delta_root_1,
                                    plan.genus_max, plan.slot_cap);
    G += kdv_tau_log(er.ring, er.vars[1], er.eps, p.delta_root_2, plan.genus_max,
                     plan.slot_cap);

    CorrectionData cd = make_correction_data(er, plan, p, r_log, G);

    // exp of the correction operator on the exponentiated tau-log sum:
    // conjugating term by term keeps everything a power series
    TruncatedSeries total = TruncatedSeries::one(er.ring);
    TruncatedSeries b = TruncatedSeries::one(er.ring);
    Rat nfact = 1;
    for (int n = 1; n <= plan.weight_floor; ++n) {
        b = apply_correction(er, plan, cd, b);
        if (b.is_zero()) break;
        nfact *= n;
        total += b * Qir(Rat(1) / nfact);
    }

    // slot count is preserved by every later stage, so only the claimed slot
    // budget survives; taking the slot-pruned log is sound because slot
    // counts only add under multiplication. The log's own output above the
    // budget is junk for the same reason (its in-budget part is exact), so it
    // is pruned again: products of pruned pieces land there unbalanced
    TruncatedSeries corr = prune_slots(total, er.slot_family, plan.n_max);
    TruncatedSeries log_a =
        prune_slots(G, er.slot_family, plan.n_max) +
        prune_slots(corr.log(), er.slot_family, plan.n_max);

    AncestorFrame frame;
    frame.plan = plan;
    frame.point = p;
    frame.ring = er.ring;
    frame.T = er.vars;
    frame.eps = er.eps;
    frame.slot_family = er.slot_family;
    frame.log_ancestor = std::move(log_a);
    return frame;
}

AncestorFrame ancestor_potential_frame(const GiventalPlan& plan, const FrobeniusPoint& p) {
    RMatrixTable table = r_matrix(p, plan.weight_floor);
    return ancestor_potential_frame(plan, p, r_matrix_log(table));
}

FlatAncestor flat_ancestor_potential(const AncestorFrame& frame) {
    ExpansionRing er = make_expansion_ring(frame.plan, "t1", "t2");
    const Mat2<Qir> psi = frame_matrices(frame.point).psi;

    std::vector<TruncatedSeries> images(frame.ring->var_count());
    std::vector<const TruncatedSeries*> ptrs(frame.ring->var_count(), nullptr);
    for (int i = 0; i < 2; ++i)
        for (size_t a = 0; a < frame.T[i].size(); ++a) {
            TruncatedSeries expr(er.loose);
            for (int alpha = 0; alpha < 2; ++alpha)
                expr += TruncatedSeries::var(er.loose, er.vars[alpha][a]) * mat_entry(psi, i, alpha);
            images[frame.T[i][a]] = std::move(expr);
            ptrs[frame.T[i][a]] = &images[frame.T[i][a]];
        }

    FlatAncestor flat;
    flat.plan = frame.plan;
    flat.point = frame.point;
    flat.ring = er.ring;
    flat.t = er.vars;
    flat.eps = er.eps;
    flat.slot_family = er.slot_family;
    flat.log_ancestor = map_with_eps(frame.log_ancestor, frame.eps, er.loose, er.eps, ptrs, er.ring);
    return flat;
}

Qir cal_entry_value(const CalScalar& s, const Qir& cal_const) {
    // the entry depends on psi and log t2 through their sum only, so the
    // L = 0 slice evaluated at psi = cal_const is the value at that sum
    const ExactScalar slice = s.at_log_zero();
    Qir value;
    for (int k = slice.psi_degree(); k >= 0; --k) value = value * cal_const + slice.coeff(k);
    return value;
}

Mat2<Qir> cal_matrix_value(const CalMat& m, const Qir& cal_const) {
    return {cal_entry_value(m.a, cal_const), cal_entry_value(m.b, cal_const),
            cal_entry_value(m.c, cal_const), cal_entry_value(m.d, cal_const)};
}

std::vector<std::vector<Mat2<Qir>>> propagator_kernel(const SMatrixTable& table, int K,
                                                      const Qir& cal_const) {
    if (static_cast<int>(table.S.size()) <= 2 * K + 1)
        throw std::invalid_argument("calibration table too short for propagator order");
    std::vector<Mat2<Qir>> sv, sa;
    for (int m = 0; m <= 2 * K + 1; ++m) {
        sv.push_back(cal_matrix_value(table.S[static_cast<size_t>(m)], cal_const));
        sa.push_back(eta_adjoint(sv.back()));
    }
    const Mat2<Qir> zero{Qir(0), Qir(0), Qir(0), Qir(0)};
    std::vector<std::vector<Mat2<Qir>>> W(static_cast<size_t>(K) + 1,
                                          std::vector<Mat2<Qir>>(static_cast<size_t>(K) + 1, zero));
    for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
            Mat2<Qir> acc = zero;
            for (int j = 0; j <= l; ++j) {
                Mat2<Qir> term = sa[static_cast<size_t>(k + 1 + j)] * sv[static_cast<size_t>(l - j)];
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            W[static_cast<size_t>(k)][static_cast<size_t>(l)] = acc;
        }
    return W;
}

Qir one_slot_genus_zero(const SMatrixTable& table, int a, const Qir& cal_const) {
    if (a < 0 || a + 2 >= static_cast<int>(table.S.size()))
        throw std::invalid_argument("calibration table too short for one-slot coefficient");
    // eta-pairing with the unit direction picks the (2,1) entry of S_{a+2}
    return cal_entry_value(table.S[static_cast<size_t>(a + 2)].c, cal_const);
}

Qir two_slot_genus_zero(const SMatrixTable& table, int a, int b, const Qir& cal_const) {
    if (a < 0 || b < 0 || a + b + 1 >= static_cast<int>(table.S.size()))
        throw std::invalid_argument("calibration table too short for two-slot coefficient");
    // paired first-column square of the calibration ...
    //   N(z, w) = sum_{m,n} eta(col1 S_m, col1 S_n) z^m w^n   (m + n odd),
    // divided by (z + w) via the telescoping U_{ab} = sum_j (-1)^j N_{a+1+j, b-j}
    auto paired = [&](int m, int n) {
        const CalMat& sm = table.S[static_cast<size_t>(m)];
        const CalMat& sn = table.S[static_cast<size_t>(n)];
        return cal_entry_value(sm.a, cal_const) * cal_entry_value(sn.c, cal_const) +
               cal_entry_value(sm.c, cal_const) * cal_entry_value(sn.a, cal_const);
    };
    Qir acc;
    for (int j = 0; j <= b; ++j) {
        Qir term = paired(a + 1 + j, b - j);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

namespace {

// Renders calibration entries into the descendent ring: either evaluated at a
// numeric value of the calibration constant, or expanded as polynomials in a
// dedicated ring variable so the constant stays symbolic end to end.
struct CalRender {
    RingPtr ring;
    Qir value;
    int psi = -1;

    TruncatedSeries entry(const CalScalar& s) const {
        if (psi >= 0)
            return TruncatedSeries::from_scalar(ring, s.at_log_zero(), static_cast<VarId>(psi));
        return TruncatedSeries::constant(ring, cal_entry_value(s, value));
    }
    Mat2<TruncatedSeries> matrix(const CalMat& m) const {
        return {entry(m.a), entry(m.b), entry(m.c), entry(m.d)};
    }
};

const TruncatedSeries& rendered_entry(const Mat2<TruncatedSeries>& m, int i, int j) {
    return j == 0 ? (i == 0 ? m.a : m.c) : (i == 0 ? m.b : m.d);
}

std::vector<std::vector<Mat2<TruncatedSeries>>> rendered_propagator(const SMatrixTable& table,
                                                                    int K, const CalRender& r) {
    if (static_cast<int>(table.S.size()) <= 2 * K + 1)
        throw std::invalid_argument("calibration table too short for propagator order");
    std::vector<Mat2<TruncatedSeries>> sv, sa;
    for (int m = 0; m <= 2 * K + 1; ++m) {
        sv.push_back(r.matrix(table.S[static_cast<size_t>(m)]));
        const Mat2<TruncatedSeries>& v = sv.back();
        sa.push_back({v.d, v.b, v.c, v.a}); // eta-adjoint for the antidiagonal metric
    }
    const Mat2<TruncatedSeries> zero{TruncatedSeries(r.ring), TruncatedSeries(r.ring),
                                     TruncatedSeries(r.ring), TruncatedSeries(r.ring)};
    std::vector<std::vector<Mat2<TruncatedSeries>>> W(
        static_cast<size_t>(K) + 1, std::vector<Mat2<TruncatedSeries>>(static_cast<size_t>(K) + 1, zero));
    for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
            Mat2<TruncatedSeries> acc = zero;
            for (int j = 0; j <= l; ++j) {
                Mat2<TruncatedSeries> term =
                    sa[static_cast<size_t>(k + 1 + j)] * sv[static_cast<size_t>(l - j)];
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            W[static_cast<size_t>(k)][static_cast<size_t>(l)] = acc;
        }
    return W;
}

DescendentPotential descendent_impl(const GiventalPlan& plan, const FrobeniusPoint& p,
                                    const Qir& cal_const, bool symbolic) {
    FlatAncestor flat = flat_ancestor_potential(ancestor_potential_frame(plan, p));
    if (flat.log_ancestor.min_exponent(flat.eps) < -2)
        throw std::logic_error("expansion leaks below the genus-zero order");

    auto ring = Ring::make();
    DescendentPotential d;
    d.plan = plan;
    d.point = p;
    d.cal_const = symbolic ? Qir(0) : cal_const;
    d.slot_family = ring->add_family("slot", plan.n_max);
    int fam_eps = ring->add_family("eps");
    d.eps = ring->add_var("eps", fam_eps, {-2, 2 * plan.genus_max - 2});
    if (symbolic) {
        // calibration-constant powers are nonnegative and additive, so the
        // generous window never truncates anything this assembly produces
        int fam_psi = ring->add_family("psi");
        d.psi = ring->add_var("psi", fam_psi, {0, 256});
    }
    const std::string stem[2] = {"t1", "t2"};
    for (int alpha = 0; alpha < 2; ++alpha)
        for (int a = 0; a <= plan.index_max; ++a)
            d.t[alpha].push_back(ring->add_var(stem[alpha] + "_" + std::to_string(a),
                                               d.slot_family, {0, plan.n_max}));
    ring->set_genus_cap(plan.genus_max);
    ring->set_slot_cap(plan.n_max);
    d.ring = ring;
    const CalRender render{d.ring, cal_const, d.psi};

    // triangular substitution T^beta_b = sum_l (S_l)^beta_alpha t^alpha_{b+l};
    // slots beyond index_max are set to zero
    const int kw = std::max(plan.index_max, 1);
    SMatrixTable st = s_matrix(p, 2 * kw + 1);
    std::vector<Mat2<TruncatedSeries>> sv;
    for (const CalMat& m : st.S) sv.push_back(render.matrix(m));

    std::vector<TruncatedSeries> images(flat.ring->var_count());
    std::vector<const TruncatedSeries*> ptrs(flat.ring->var_count(), nullptr);
    for (int beta = 0; beta < 2; ++beta)
        for (size_t b = 0; b < flat.t[beta].size(); ++b) {
            TruncatedSeries expr(d.ring);
            for (int l = 0; static_cast<int>(b) + l <= plan.index_max; ++l)
                for (int alpha = 0; alpha < 2; ++alpha)
                    expr += TruncatedSeries::var(d.ring, d.t[alpha][b + static_cast<size_t>(l)]) *
                            rendered_entry(sv[static_cast<size_t>(l)], beta, alpha);
            images[flat.t[beta][b]] = std::move(expr);
            ptrs[flat.t[beta][b]] = &images[flat.t[beta][b]];
        }
    // the descendent ring has no weight caps, so it is its own scratch space
    TruncatedSeries total = map_with_eps(flat.log_ancestor, flat.eps, d.ring, d.eps, ptrs, d.ring);

    // propagator quadratic form in the shifted slot variables; the base-point
    // part of slot zero and the unit shift at slot one carry the one-slot and
    // constant sectors
    auto W = rendered_propagator(st, kw, render);
    std::vector<std::array<TruncatedSeries, 2>> q(static_cast<size_t>(kw) + 1);
    for (int k = 0; k <= kw; ++k)
        for (int alpha = 0; alpha < 2; ++alpha) {
            TruncatedSeries s(d.ring);
            if (k <= plan.index_max)
                s += TruncatedSeries::var(d.ring, d.t[alpha][static_cast<size_t>(k)]);
            // slot-zero variables measure the deviation from the base point
            if (k == 0) s += TruncatedSeries::constant(d.ring, alpha == 0 ? p.t1v : p.t2v);
            if (alpha == 0 && k == 1) s -= TruncatedSeries::one(d.ring);
            q[static_cast<size_t>(k)][static_cast<size_t>(alpha)] = std::move(s);
        }
    TruncatedSeries quad(d.ring);
    for (int k = 0; k <= kw; ++k)
        for (int l = 0; l <= kw; ++l) {
            const Mat2<TruncatedSeries>& w = W[static_cast<size_t>(k)][static_cast<size_t>(l)];
            const auto& qk = q[static_cast<size_t>(k)];
            const auto& ql = q[static_cast<size_t>(l)];
            // eta( W q_l , q_k ) with the antidiagonal metric
            quad += (ql[0] * w.a + ql[1] * w.b) * qk[1];
            quad += (ql[0] * w.c + ql[1] * w.d) * qk[0];
        }
    total += quad.times_monomial(Monomial::single(d.eps, -2), Qir(Rat(1, 2)));

    // normalize the overall constant to one: the t-free part collects the
    // base-point prefactor and is not a claimed coefficient
    std::vector<VarId> bare{d.eps};
    if (d.psi >= 0) bare.push_back(static_cast<VarId>(d.psi));
    total -= total.part_supported_on(bare);

    // a monomial with no eps part bypasses the eps window, so for a pure
    // genus-zero target the eps^0 junk sector must be dropped by hand
    if (2 * plan.genus_max - 2 < 0) {
        TruncatedSeries kept(d.ring);
        for (const auto& [m, c] : total.terms())
            if (m.exponent(d.eps) <= 2 * plan.genus_max - 2) kept.add_term(m, c);
        total = std::move(kept);
    }
    d.log_descendent = std::move(total);
    return d;
}

} // namespace

DescendentPotential descendent_potential(const GiventalPlan& plan, const FrobeniusPoint& p,
                                         const Qir& cal_const) {
    return descendent_impl(plan, p, cal_const, false);
}

DescendentPotential descendent_potential_psi(const GiventalPlan& plan, const FrobeniusPoint& p) {
    return descendent_impl(plan, p, Qir(0), true);
}

TruncatedSeries apply_quantized(const LinearHamiltonian& h, const TruncatedSeries& f,
                                const std::array<std::vector<VarId>, 2>& q, VarId eps) {
    TruncatedSeries out(f.ring());
    const Monomial eps_up = Monomial::single(eps, 1);
    const Monomial eps_down = Monomial::single(eps, -1);
    for (size_t l = 0; l < h.upper.size(); ++l) {
        const Qir sign = (l % 2 == 0) ? Qir(-1) : Qir(1); // (-1)^{l+1}
        const Qir comps[2] = {h.upper[l].x, h.upper[l].y};
        for (int alpha = 0; alpha < 2; ++alpha) {
            if (comps[alpha].is_zero()) continue;
            out += f.derivative(q[alpha][l]).times_monomial(eps_up, sign * comps[alpha]);
        }
    }
    for (size_t l = 0; l < h.lower.size(); ++l) {
        const Qir comps[2] = {h.lower[l].x, h.lower[l].y};
        for (int alpha = 0; alpha < 2; ++alpha) {
            if (comps[alpha].is_zero()) continue;
            out += f.times_monomial(eps_down.times(Monomial::single(q[alpha][l], 1)),
                                    comps[alpha]);
        }
    }
    return out;
}

Qir symplectic_pairing(const LinearHamiltonian& f1, const LinearHamiltonian& f2) {
    Qir acc;
    const size_t n = std::max(std::max(f1.upper.size(), f1.lower.size()),
                              std::max(f2.upper.size(), f2.lower.size()));
    auto at = [](const std::vector<Vec2<Qir>>& v, size_t k) {
        return k < v.size() ? v[k] : Vec2<Qir>{Qir(0), Qir(0)};
    };
    for (size_t m = 0; m < n; ++m) {
        const Vec2<Qir> c1 = at(f1.lower, m), d2 = at(f2.upper, m);
        const Vec2<Qir> d1 = at(f1.upper, m), c2 = at(f2.lower, m);
        Qir term = c1.x * d2.x + c1.y * d2.y - (d1.x * c2.x + d1.y * c2.y);
        acc = (m % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace catalan
