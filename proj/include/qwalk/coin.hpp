#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qwalk {

using Complex = std::complex<double>;

/// Coin basis direction. The ordering (L, S, R) is used for every matrix and
/// spinor in the library.
enum class Coin { Left = 0, Stay = 1, Right = 2 };

/// Three coin amplitudes attached to one lattice site.
struct CoinSpinor {
    Complex left{};
    Complex stay{};
    Complex right{};

    static CoinSpinor basis(Coin c);

    Complex& operator[](Coin c);
    const Complex& operator[](Coin c) const;

    double norm2() const { return std::norm(left) + std::norm(stay) + std::norm(right); }
    bool is_zero() const { return left == Complex{} && stay == Complex{} && right == Complex{}; }

    /// L and R swapped; the image of this spinor under reflection m -> -m.
    CoinSpinor mirrored() const { return {right, stay, left}; }

    CoinSpinor& operator+=(const CoinSpinor& o);
    CoinSpinor& operator*=(Complex k);
};

CoinSpinor operator+(CoinSpinor a, const CoinSpinor& b);
CoinSpinor operator*(Complex k, CoinSpinor a);

/// 3x3 complex matrix on the coin space, rows/columns in (L, S, R) order.
class CoinMatrix {
public:
    CoinMatrix() = default;
    explicit CoinMatrix(const std::array<Complex, 9>& row_major) : m_(row_major) {}

    static CoinMatrix identity();

    Complex operator()(std::size_t row, std::size_t col) const { return m_[3 * row + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return m_[3 * row + col]; }

    CoinSpinor apply(const CoinSpinor& v) const;
    CoinMatrix adjoint() const;

    /// Max entrywise deviation of U^dagger U from the identity.
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-12) const { return unitarity_defect() <= tol; }

    friend CoinMatrix operator*(const CoinMatrix& a, const CoinMatrix& b);

private:
    std::array<Complex, 9> m_{};
};

/// The Grover diffusion coin: -1/3 on the diagonal, 2/3 elsewhere.
CoinMatrix grover_coin();

}  // namespace qwalk
