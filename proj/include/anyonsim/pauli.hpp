#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>

namespace anyonsim::oracle {

/// Pauli string over n <= 32 qubits with exact phase tracking.
/// Internal representation: operator = i^r * X^x * Z^z (all X factors first),
/// so a Hermitian string with sign s has r = (#Y + 2*[s<0]) mod 4.
class PauliString {
  public:
    explicit PauliString(int n);
    static PauliString from_string(std::string_view s);  // "+XIZY..."
    static PauliString single(int n, int qubit, char pauli, int sign = +1);

    int n() const { return n_; }
    bool x_bit(int q) const { return (x_ >> q) & 1u; }
    bool z_bit(int q) const { return (z_ >> q) & 1u; }
    std::uint32_t x_mask() const { return x_; }
    std::uint32_t z_mask() const { return z_; }
    void set(int q, char pauli);
    void negate();

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// +1 / -1 for a Hermitian string; throws if the phase is imaginary.
    int sign() const;
    bool phase_is_real() const;

    PauliString operator*(const PauliString& other) const;
    bool operator==(const PauliString& other) const;
    bool commutes_with(const PauliString& other) const;

    std::string str() const;  // sign prefix + letters, qubit 0 first
    Eigen::MatrixXcd to_dense() const;

    /// Same letters on a larger register, qubit j -> mapping[j].
    PauliString embedded(int n_total, const std::vector<int>& mapping) const;

  private:
    PauliString(int n, std::uint32_t x, std::uint32_t z, std::uint8_t r)
        : n_(n), x_(x), z_(z), r_(r) {}
    int n_ = 0;
    std::uint32_t x_ = 0, z_ = 0;
    std::uint8_t r_ = 0;  // phase exponent, operator = i^r X^x Z^z
};

}  // namespace anyonsim::oracle
