#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

CoinSpinor CoinSpinor::basis(Coin c) {
    CoinSpinor v;
    v[c] = 1.0;
    return v;
}

Complex& CoinSpinor::operator[](Coin c) {
    switch (c) {
        case Coin::Left: return left;
        case Coin::Stay: return stay;
        case Coin::Right: break;
    }
    return right;
}

const Complex& CoinSpinor::operator[](Coin c) const {
    return const_cast<CoinSpinor&>(*this)[c];
}

CoinSpinor& CoinSpinor::operator+=(const CoinSpinor& o) {
    left += o.left;
    stay += o.stay;
    right += o.right;
    return *this;
}

CoinSpinor& CoinSpinor::operator*=(Complex k) {
    left *= k;
    stay *= k;
    right *= k;
    return *this;
}

CoinSpinor operator+(CoinSpinor a, const CoinSpinor& b) { return a += b; }
CoinSpinor operator*(Complex k, CoinSpinor a) { return a *= k; }

CoinMatrix CoinMatrix::identity() {
    CoinMatrix id;
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
    return id;
}

CoinSpinor CoinMatrix::apply(const CoinSpinor& v) const {
    return {m_[0] * v.left + m_[1] * v.stay + m_[2] * v.right,
            m_[3] * v.left + m_[4] * v.stay + m_[5] * v.right,
            m_[6] * v.left + m_[7] * v.stay + m_[8] * v.right};
}

CoinMatrix CoinMatrix::adjoint() const {
    CoinMatrix a;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = std::conj((*this)(j, i));
    return a;
}

CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b) {
    CoinMatrix c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

double CoinMatrix::unitarity_defect() const {
    const CoinMatrix p = adjoint() * (*this);
    const CoinMatrix id = identity();
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(p(i, j) - id(i, j)));
    return worst;
}

CoinMatrix grover_coin() {
    constexpr double d = -1.0 / 3.0;
    constexpr double o = 2.0 / 3.0;
    return CoinMatrix({d, o, o, o, d, o, o, o, d});
}

}  // namespace qwalk
