#include "convcodes/reed_muller.hpp"

#include <bit>
#include <functional>

#include "convcodes/errors.hpp"

namespace convcodes {

namespace {

constexpr std::size_t kMaxGeneratorBits = std::size_t{1} << 28;

void check_rm_params(unsigned r, unsigned m) {
    if (m < 1 || m > kMaxRmVariables)
        throw SizeGuardError("RM: m = " + std::to_string(m) + " outside 1.." + std::to_string(kMaxRmVariables),
                             static_cast<double>(m));
    if (r > m) throw InvalidArgument("RM: order r = " + std::to_string(r) + " exceeds m = " + std::to_string(m));
}

}  // namespace

PointList::PointList(unsigned m) : m_(m) {
    if (m < 1 || m > kMaxRmVariables)
        throw SizeGuardError("points: m = " + std::to_string(m) + " outside 1.." + std::to_string(kMaxRmVariables),
                             static_cast<double>(m));
}

std::size_t PointList::weight(std::size_t j) const { return static_cast<std::size_t>(std::popcount(j)); }

std::vector<bool> PointList::point(std::size_t j) const {
    std::vector<bool> out(m_);
    for (unsigned v = 1; v <= m_; ++v) out[v - 1] = coordinate(j, v);
    return out;
}

Monomial Monomial::of(std::initializer_list<unsigned> variables) {
    Monomial mono;
    for (unsigned v : variables) {
        if (v < 1 || v > kMaxRmVariables) throw InvalidArgument("monomial variable index out of range");
        mono.vars |= std::uint32_t{1} << (v - 1);
    }
    return mono;
}

unsigned Monomial::degree() const { return static_cast<unsigned>(std::popcount(vars)); }

std::vector<unsigned> Monomial::variables() const {
    std::vector<unsigned> out;
    for (unsigned v = 1; v <= 32; ++v)
        if ((vars >> (v - 1)) & 1U) out.push_back(v);
    return out;
}

std::vector<Monomial> monomials_of_degree(unsigned d, unsigned m) {
    std::vector<Monomial> out;
    std::vector<unsigned> chosen;
    std::function<void(unsigned)> pick = [&](unsigned next) {
        if (chosen.size() == d) {
            Monomial mono;
            for (unsigned v : chosen) mono.vars |= std::uint32_t{1} << (v - 1);
            out.push_back(mono);
            return;
        }
        for (unsigned v = next; v <= m; ++v) {
            chosen.push_back(v);
            pick(v + 1);
            chosen.pop_back();
        }
    };
    pick(1);
    return out;
}

MonomialBasis monomial_basis(unsigned r, unsigned m) {
    check_rm_params(r, m);
    MonomialBasis basis{m, r, {}};
    for (unsigned d = 0; d <= r; ++d)
        for (Monomial mono : monomials_of_degree(d, m)) basis.monomials.push_back(mono);
    return basis;
}

std::size_t rm_dimension(unsigned r, unsigned m) {
    std::size_t total = 0;
    std::size_t binom = 1;  // C(m, i)
    for (unsigned i = 0; i <= r && i <= m; ++i) {
        total += binom;
        binom = binom * (m - i) / (i + 1);
    }
    return total;
}

PointList points(unsigned m) { return PointList(m); }

BitVector evaluate_monomial(Monomial mono, const PointList& pts) {
    if (mono.vars >> pts.m() != 0) throw InvalidArgument("monomial uses a variable beyond X_m");
    // Point j has X_v = bit (m - v) of j; map the monomial into that bit layout.
    std::size_t mask = 0;
    for (unsigned v : mono.variables()) mask |= std::size_t{1} << (pts.m() - v);
    BitVector out(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j)
        if ((j & mask) == mask) out.set(j);
    return out;
}

BitMatrix rm_generator(unsigned r, unsigned m) {
    check_rm_params(r, m);
    const std::size_t k = rm_dimension(r, m);
    const std::size_t n = std::size_t{1} << m;
    if (k * n > kMaxGeneratorBits)
        throw SizeGuardError("RM generator too large: " + std::to_string(k) + " x " + std::to_string(n),
                             static_cast<double>(k) * static_cast<double>(n));
    const PointList pts(m);
    const MonomialBasis basis = monomial_basis(r, m);
    BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) g.set_row(i, evaluate_monomial(basis.monomials[i], pts));
    return g;
}

RmCode make_rm(unsigned r, unsigned m) {
    return RmCode{r, m, LinearCode::from_generator(rm_generator(r, m)), monomial_basis(r, m), PointList(m)};
}

LinearCode plotkin_sum(const LinearCode& c, const LinearCode& d) {
    if (c.n() != d.n()) throw DimensionError("plotkin_sum: codes differ in length");
    const std::size_t n = c.n();
    std::vector<BitMatrix> rows;
    if (!c.is_zero()) rows.push_back(stack_columns({c.generator(), c.generator()}));
    if (!d.is_zero()) rows.push_back(stack_columns({BitMatrix(d.k(), n), d.generator()}));
    if (rows.empty()) return LinearCode::zero(2 * n);
    return LinearCode::from_generator(stack_rows(rows));
}

BitMatrix degree_block_A(unsigned r, unsigned m) {
    if (m < 2 || r < 1 || r > m - 1)
        throw InvalidArgument("degree_block_A requires 1 <= r <= m - 1 (got r = " + std::to_string(r) +
                              ", m = " + std::to_string(m) + ")");
    check_rm_params(r, m - 1);
    const PointList pts(m - 1);
    const auto monos = monomials_of_degree(r, m - 1);
    BitMatrix a(monos.size(), pts.size());
    for (std::size_t i = 0; i < monos.size(); ++i) a.set_row(i, evaluate_monomial(monos[i], pts));
    return a;
}

IndexSet zero_columns(const BitMatrix& a) {
    IndexSet out;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (a.column_weight(c) == 0) out.push_back(c);
    return out;
}

IndexSet low_weight_points(unsigned m, unsigned w) {
    const PointList pts(m);
    IndexSet out;
    for (std::size_t j = 0; j < pts.size(); ++j)
        if (pts.weight(j) <= w) out.push_back(j);
    return out;
}

TransformedGenerator rm_transformed_generator(unsigned r, unsigned m) {
    if (m < 2 || r < 1 || r > m - 1)
        throw InvalidArgument("rm_transformed_generator requires 1 <= r <= m - 1");
    const BitMatrix inner = rm_generator(r - 1, m - 1);
    const BitMatrix a = degree_block_A(r, m);
    const std::size_t half = inner.cols();
    const BitMatrix top = stack_columns({inner, BitMatrix(inner.rows(), half)});
    const BitMatrix middle = stack_columns({a, a});
    const BitMatrix bottom = stack_columns({BitMatrix(inner.rows(), half), inner});
    return {stack_rows({top, middle, bottom}), {inner.rows(), a.rows(), inner.rows()}};
}

}  // namespace convcodes
