#include "nsmp/engine.hpp"

#include "nsmp/sign_pattern.hpp"

#include <algorithm>

namespace nsmp {

std::string property_name(Property p) { return p == Property::Nsmp ? "nSMP" : "nSSP"; }

NsmpSystem assemble_system(const RationalMatrix& a, Property property) {
    if (!a.square()) throw NonSquare("system assembly needs a square matrix");
    std::size_t n = a.rows();

    NsmpSystem sys;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) == 0) sys.free_positions.emplace_back(i, j);

    std::size_t cols = sys.free_positions.size();
    std::size_t rows = n * n + (property == Property::Nsmp ? n : 0);
    RationalMatrix m(rows, cols);

    // Commutator equations: (A X^T - X^T A)_{pq} = 0, linear in the free X_ij.
    std::size_t row = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q, ++row)
            for (std::size_t v = 0; v < cols; ++v) {
                auto [i, j] = sys.free_positions[v];
                Rational coeff = 0;
                if (q == i) coeff += a.at(p, j);
                if (p == j) coeff -= a.at(i, q);
                m.at(row, v) = coeff;
            }

    // Power-trace equations: tr(X^T A^k) = sum_ij X_ij (A^k)_ij = 0, 0 <= k < n.
    if (property == Property::Nsmp) {
        RationalMatrix power = RationalMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k, ++row) {
            if (k > 0) power = power * a;
            for (std::size_t v = 0; v < cols; ++v) {
                auto [i, j] = sys.free_positions[v];
                m.at(row, v) = power.at(i, j);
            }
        }
    }

    sys.constraint_matrix = std::move(m);
    return sys;
}

NsmpVerdict check(const RationalMatrix& a, Property property) {
    NsmpSystem sys = assemble_system(a, property);
    NsmpVerdict verdict;
    verdict.property = property;
    if (sys.free_positions.empty()) return verdict;

    std::vector<RationalMatrix> basis = nullspace(sys.constraint_matrix);
    verdict.nullity = basis.size();
    if (basis.empty()) return verdict;

    verdict.outcome = Outcome::LacksProperty;
    RationalMatrix x(a.rows(), a.cols());
    for (std::size_t v = 0; v < sys.free_positions.size(); ++v) {
        auto [i, j] = sys.free_positions[v];
        x.at(i, j) = basis.front().at(v, 0);
    }
    verdict.witness = std::move(x);
    return verdict;
}

bool verify_witness(const RationalMatrix& a, const RationalMatrix& x, Property property) {
    if (!a.square() || a.rows() != x.rows() || a.cols() != x.cols())
        throw DimensionMismatch("witness dimensions must match the square matrix");
    if (x.is_zero()) return false;
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) != 0 && x.at(i, j) != 0) return false;
    RationalMatrix xt = x.transpose();
    if (!(a * xt - xt * a).is_zero()) return false;
    if (property == Property::Nsmp) {
        RationalMatrix power = RationalMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (k > 0) power = power * a;
            if (!(xt * power).trace().is_zero()) return false;
        }
    }
    return true;
}

BlockVerdict check_via_blocks(const RationalMatrix& a) {
    if (!a.square()) throw NonSquare("block check needs a square matrix");
    SccDecomposition scc = scc_decompose(pattern_of(a));

    BlockVerdict bv;
    std::vector<Polynomial> charpolys;
    for (auto [begin, end] : scc.blocks) {
        std::vector<std::size_t> idx(scc.permutation.begin() + begin,
                                     scc.permutation.begin() + end);
        RationalMatrix block = a.submatrix(idx, idx);
        bv.block_verdicts.push_back(check(block, Property::Nsmp));
        charpolys.push_back(char_poly(block));
    }
    for (std::size_t i = 0; i < charpolys.size() && bv.spectra_disjoint; ++i)
        for (std::size_t j = i + 1; j < charpolys.size(); ++j)
            if (!poly_gcd(charpolys[i], charpolys[j]).is_constant()) {
                bv.spectra_disjoint = false;
                break;
            }

    bool all_have = std::all_of(bv.block_verdicts.begin(), bv.block_verdicts.end(),
                                [](const NsmpVerdict& v) { return v.has_property(); });
    bv.combined.property = Property::Nsmp;
    bv.combined.outcome =
        all_have && bv.spectra_disjoint ? Outcome::HasProperty : Outcome::LacksProperty;
    return bv;
}

namespace {

// Conjugates X on the support vertices back through the diagonal similarity
// that set the centre row of A to ones: X_A = D^{-1} X_B D with d_c = 1 and
// d_v = 1 / A_{c,v}.
RationalMatrix pull_back(const RationalMatrix& a, std::size_t centre,
                         const std::vector<std::size_t>& support,
                         const RationalMatrix& template_block) {
    std::size_t n = a.rows();
    RationalMatrix x(n, n);
    auto scale = [&](std::size_t v) { return Rational(1) / a.at(centre, v); };
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (template_block.at(i, j) == 0) continue;
            x.at(support[i], support[j]) =
                template_block.at(i, j) * scale(support[j]) / scale(support[i]);
        }
    return x;
}

}  // namespace

std::optional<RationalMatrix> star_witness(const StarStructure& ss, const RationalMatrix& a) {
    std::optional<StarStructure> actual = recognize_star(pattern_of(a));
    if (!actual || actual->centre != ss.centre)
        throw PatternMismatch("matrix is not a realization of the recognized star");
    std::size_t c = ss.centre;

    // Pair template: two loopless vertices u, v with oppositely signed
    // 2-cycles. In centre-row-ones scaling, with p = B_{u,c}, q = B_{v,c}:
    // X[{u,v}] = [[-q, q], [p, -p]]; the trace vanishes exactly when the two
    // 2-cycle products are opposite.
    const auto& loopless = ss.loopless_two_cycle_signs;
    for (std::size_t s = 0; s < loopless.size(); ++s)
        for (std::size_t t = s + 1; t < loopless.size(); ++t) {
            if (loopless[s].second == loopless[t].second) continue;
            std::size_t u = loopless[s].first, v = loopless[t].first;
            Rational pu = a.at(u, c) * a.at(c, u);  // 2-cycle products
            Rational qv = a.at(v, c) * a.at(c, v);
            RationalMatrix block(2, 2, {-qv, qv, pu, -pu});
            RationalMatrix x = pull_back(a, c, {u, v}, block);
            if (verify_witness(a, x, Property::Nsmp)) return x;
        }

    // Triple template: three non-centre vertices whose loops carry the same
    // sign (zero allowed). Needs the three loop values exactly equal.
    for (Sign sigma : {Sign::Zero, Sign::Plus, Sign::Minus}) {
        std::vector<std::size_t> verts;
        for (const auto& [v, loop] : ss.non_centre_loops)
            if (loop == sigma) verts.push_back(v);
        if (verts.size() < 3) continue;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                for (std::size_t k = j + 1; k < verts.size(); ++k) {
                    std::size_t u1 = verts[i], u2 = verts[j], u3 = verts[k];
                    if (a.at(u1, u1) != a.at(u2, u2) || a.at(u2, u2) != a.at(u3, u3)) continue;
                    Rational ra = a.at(u1, c) * a.at(c, u1);
                    Rational rb = a.at(u2, c) * a.at(c, u2);
                    Rational rc = a.at(u3, c) * a.at(c, u3);
                    RationalMatrix block(
                        3, 3, {0, rc * rb, -rc * rb, -rc * ra, 0, rc * ra, ra * rb, -ra * rb, 0});
                    RationalMatrix x = pull_back(a, c, {u1, u2, u3}, block);
                    if (verify_witness(a, x, Property::Nsmp)) return x;
                }
    }
    return std::nullopt;
}

}  // namespace nsmp
