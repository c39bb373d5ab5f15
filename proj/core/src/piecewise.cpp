#include "toric/piecewise.hpp"

#include "toric/errors.hpp"

#include <stdexcept>

namespace toric {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Polynomial::eval(const Rat& t) const {
    Rat v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
    return v;
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Rat> out(coeffs_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / Rat(i + 1);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::lagrange(const std::vector<std::pair<Rat, Rat>>& nodes) {
    const std::size_t n = nodes.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (t - t_j) / (t_i - t_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= nodes[i].first - nodes[j].first;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * nodes[j].first;
            }
            basis = std::move(next);
        }
        if (denom == 0) throw std::invalid_argument("repeated interpolation node");
        const Rat w = nodes[i].second / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
    }
    return Polynomial(std::move(acc));
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rat> breakpoints,
                                         std::vector<Polynomial> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.empty()) throw std::invalid_argument("no breakpoints");
    if (breaks_.size() == 1) {
        if (pieces_.size() != 1)
            throw std::invalid_argument("degenerate domain needs exactly one piece");
        return;
    }
    if (pieces_.size() + 1 != breaks_.size())
        throw std::invalid_argument("piece count does not match breakpoints");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("breakpoints must increase strictly");
    }
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (pieces_[i].eval(breaks_[i + 1]) != pieces_[i + 1].eval(breaks_[i + 1]))
            throw std::invalid_argument("pieces are discontinuous at a breakpoint");
    }
}

Rat PiecewisePolynomial::eval(const Rat& t) const {
    if (t < breaks_.front() || t > breaks_.back())
        throw std::out_of_range("evaluation outside the domain");
    if (degenerate()) return pieces_.front().eval(t);
    std::size_t i = 0;
    while (i + 2 < breaks_.size() && t >= breaks_[i + 1]) ++i;
    return pieces_[i].eval(t);
}

Rat PiecewisePolynomial::integrate() const {
    if (degenerate()) return 0;
    Rat total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Polynomial f = pieces_[i].antiderivative();
        total += f.eval(breaks_[i + 1]) - f.eval(breaks_[i]);
    }
    return total;
}

}  // namespace toric
