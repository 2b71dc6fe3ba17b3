#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "syntomic/witt.hpp"

namespace syntomic {

/// Dense matrix over Z/p^N with canonical entries in [0, p^N).
class PModMatrix {
public:
    PModMatrix() = default;
    PModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, int precision);

    static PModMatrix identity(std::size_t n, std::uint32_t p, int precision);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }
    int precision() const { return N_; }
    Residue modulus() const { return pN_; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// Sets an entry from any integer, reducing into [0, p^N).
    void set(std::size_t r, std::size_t c, std::int64_t value);
    void set_residue(std::size_t r, std::size_t c, Residue value) { data_[r * cols_ + c] = value % pN_; }
    /// Adds value into an entry.
    void accumulate(std::size_t r, std::size_t c, Residue value);

    bool is_zero() const;
    int valuation(std::size_t r, std::size_t c) const;

    PModMatrix operator*(const PModMatrix& other) const;
    friend bool operator==(const PModMatrix& a, const PModMatrix& b);

    /// Reinterprets the same integer entries at a smaller precision.
    PModMatrix reduced(int precision) const;

    std::string to_string() const;

private:
    friend struct SnfEngine;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    int N_ = 1;
    Residue pN_ = 2;
    std::vector<Residue> data_;
};

/// left * M * right = diag(p^{e_1}, ..., p^{e_r}, ...) with e_1 <= e_2 <= ...
/// An exponent equal to N means the diagonal entry is zero modulo p^N.
struct SNFResult {
    std::vector<int> diag;  // length min(rows, cols)
    PModMatrix left;
    PModMatrix right;
};

SNFResult snf(const PModMatrix& m);

/// Inverse of a matrix whose determinant is a unit; throws InvalidArgument otherwise.
PModMatrix inverse(const PModMatrix& m);

/// A finitely generated Z_p-module presented as a sum of cyclic factors.
///
/// Each factor exponent a >= 1 stands for (Z/p^a)^multiplicity. A factor with
/// a = N cannot be distinguished from a free summand at the working precision;
/// `saturated` is set whenever such a factor occurs.
struct HomologyGroup {
    std::vector<int> factors;  // sorted ascending
    int multiplicity = 1;
    int free_rank = 0;  // summands known to be free Z_p (set by callers, never by homology_at)
    bool saturated = false;

    bool is_zero() const { return factors.empty() && free_rank == 0; }
    /// Total p-adic length, sum of exponents times multiplicity.
    std::int64_t length() const;
    std::string to_string(std::uint32_t p) const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H = ker(d_out) / im(d_in) for a cochain complex of finite free Z_p-modules
/// known modulo p^N. d_in maps into the middle term, d_out maps out of it.
///
/// Kernel coordinates are read from the SNF of d_out (diagonal entries that
/// vanish mod p^N); the image of d_in is expressed in that basis and a second
/// SNF gives the cyclic factors. This is the homology of the integral complex,
/// not of its reduction mod p^N.
HomologyGroup homology_at(const PModMatrix& d_in, const PModMatrix& d_out);

/// Regroups raw Z/p^a factors into blocks of size `multiplicity` when every
/// exponent occurs a multiple of that many times; otherwise returns the input.
HomologyGroup group_by_multiplicity(const HomologyGroup& raw, int multiplicity);

}  // namespace syntomic
