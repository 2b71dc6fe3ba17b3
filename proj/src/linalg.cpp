#include "syntomic/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "syntomic/errors.hpp"

namespace syntomic {

namespace {

Residue mulmod(Residue a, Residue b, Residue m) {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

Residue submod(Residue a, Residue b, Residue m) { return a >= b ? a - b : a + m - b; }

int residue_valuation(Residue x, std::uint32_t p, int N) {
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Inverse of a unit modulo p^N (extended Euclid on integers).
Residue unit_inverse(Residue a, Residue m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a;
    while (new_r != 0) {
        const __int128 quot = r / new_r;
        const __int128 tmp_t = t - quot * new_t;
        t = new_t;
        new_t = tmp_t;
        const __int128 tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw InvalidArgument("not a unit");
    if (t < 0) t += m;
    return static_cast<Residue>(t);
}

}  // namespace

PModMatrix::PModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, int precision)
    : rows_(rows), cols_(cols), p_(p), N_(precision), pN_(1), data_(rows * cols, 0) {
    if (precision < 1) throw InvalidArgument("precision must be >= 1");
    for (int k = 0; k < precision; ++k) pN_ *= p;
}

PModMatrix PModMatrix::identity(std::size_t n, std::uint32_t p, int precision) {
    PModMatrix m(n, n, p, precision);
    for (std::size_t k = 0; k < n; ++k) m.data_[k * n + k] = 1 % m.pN_;
    return m;
}

void PModMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    const auto m = static_cast<std::int64_t>(pN_);
    std::int64_t v = value % m;
    if (v < 0) v += m;
    data_[r * cols_ + c] = static_cast<Residue>(v);
}

void PModMatrix::accumulate(std::size_t r, std::size_t c, Residue value) {
    Residue& dst = data_[r * cols_ + c];
    dst = (dst + value % pN_) % pN_;
}

bool PModMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

int PModMatrix::valuation(std::size_t r, std::size_t c) const { return residue_valuation((*this)(r, c), p_, N_); }

PModMatrix PModMatrix::operator*(const PModMatrix& other) const {
    if (cols_ != other.rows_ || pN_ != other.pN_) throw InvalidArgument("matrix shape or precision mismatch");
    PModMatrix out(rows_, other.cols_, p_, N_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Residue a = data_[i * cols_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                Residue& dst = out.data_[i * out.cols_ + j];
                dst = (dst + mulmod(a, other.data_[k * other.cols_ + j], pN_)) % pN_;
            }
        }
    return out;
}

bool operator==(const PModMatrix& a, const PModMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.pN_ == b.pN_ && a.data_ == b.data_;
}

PModMatrix PModMatrix::reduced(int precision) const {
    PModMatrix out(rows_, cols_, p_, precision);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] % out.pN_;
    return out;
}

std::string PModMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

// Row/column operations on a working copy plus the accumulated transforms.
struct SnfEngine {
    PModMatrix a, left, right;
    Residue m;

    explicit SnfEngine(const PModMatrix& input)
        : a(input),
          left(PModMatrix::identity(input.rows(), input.p(), input.precision())),
          right(PModMatrix::identity(input.cols(), input.p(), input.precision())),
          m(input.modulus()) {}

    Residue& at(PModMatrix& x, std::size_t r, std::size_t c) { return x.data_[r * x.cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < a.cols_; ++c) std::swap(at(a, r1, c), at(a, r2, c));
        for (std::size_t c = 0; c < left.cols_; ++c) std::swap(at(left, r1, c), at(left, r2, c));
    }
    void swap_cols(std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t r = 0; r < a.rows_; ++r) std::swap(at(a, r, c1), at(a, r, c2));
        for (std::size_t r = 0; r < right.rows_; ++r) std::swap(at(right, r, c1), at(right, r, c2));
    }
    void scale_row(std::size_t r, Residue u) {
        for (std::size_t c = 0; c < a.cols_; ++c) at(a, r, c) = mulmod(at(a, r, c), u, m);
        for (std::size_t c = 0; c < left.cols_; ++c) at(left, r, c) = mulmod(at(left, r, c), u, m);
    }
    // row_dst -= factor * row_src
    void add_row(std::size_t dst, std::size_t src, Residue factor) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            at(a, dst, c) = submod(at(a, dst, c), mulmod(factor, at(a, src, c), m), m);
        for (std::size_t c = 0; c < left.cols_; ++c)
            at(left, dst, c) = submod(at(left, dst, c), mulmod(factor, at(left, src, c), m), m);
    }
    // col_dst -= factor * col_src
    void add_col(std::size_t dst, std::size_t src, Residue factor) {
        for (std::size_t r = 0; r < a.rows_; ++r)
            at(a, r, dst) = submod(at(a, r, dst), mulmod(factor, at(a, r, src), m), m);
        for (std::size_t r = 0; r < right.rows_; ++r)
            at(right, r, dst) = submod(at(right, r, dst), mulmod(factor, at(right, r, src), m), m);
    }
};

SNFResult snf(const PModMatrix& input) {
    SnfEngine eng(input);
    const std::size_t rows = input.rows(), cols = input.cols();
    const std::size_t steps = std::min(rows, cols);
    const std::uint32_t p = input.p();
    const int N = input.precision();
    std::vector<int> diag(steps, N);

    for (std::size_t k = 0; k < steps; ++k) {
        // First minimal-valuation entry of the trailing block, row-major.
        int best = N;
        std::size_t br = k, bc = k;
        for (std::size_t r = k; r < rows && best > 0; ++r)
            for (std::size_t c = k; c < cols; ++c) {
                const int v = residue_valuation(eng.a(r, c), p, N);
                if (v < best) {
                    best = v;
                    br = r;
                    bc = c;
                    if (v == 0) break;
                }
            }
        if (best == N) break;  // remaining block vanishes mod p^N
        eng.swap_rows(k, br);
        eng.swap_cols(k, bc);

        Residue pe = 1;
        for (int j = 0; j < best; ++j) pe *= p;
        const Residue unit = eng.a(k, k) / pe;
        eng.scale_row(k, unit_inverse(unit % eng.m, eng.m));  // pivot is now exactly p^best

        for (std::size_t r = k + 1; r < rows; ++r) {
            const Residue x = eng.a(r, k);
            if (x != 0) eng.add_row(r, k, x / pe);
        }
        for (std::size_t c = k + 1; c < cols; ++c) {
            const Residue x = eng.a(k, c);
            if (x != 0) eng.add_col(c, k, x / pe);
        }
        diag[k] = best;
    }
    return SNFResult{std::move(diag), std::move(eng.left), std::move(eng.right)};
}

PModMatrix inverse(const PModMatrix& input) {
    if (input.rows() != input.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = input.rows();
    const Residue m = input.modulus();
    PModMatrix a = input;
    PModMatrix inv = PModMatrix::identity(n, input.p(), input.precision());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (a.valuation(r, k) == 0) {
                piv = r;
                break;
            }
        if (piv == n) throw InvalidArgument("matrix is not invertible over Z/p^N");
        if (piv != k)
            for (std::size_t c = 0; c < n; ++c) {
                const Residue t1 = a(k, c), t2 = inv(k, c);
                a.set_residue(k, c, a(piv, c));
                inv.set_residue(k, c, inv(piv, c));
                a.set_residue(piv, c, t1);
                inv.set_residue(piv, c, t2);
            }
        const Residue u = unit_inverse(a(k, k), m);
        for (std::size_t c = 0; c < n; ++c) {
            a.set_residue(k, c, mulmod(a(k, c), u, m));
            inv.set_residue(k, c, mulmod(inv(k, c), u, m));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k) == 0) continue;
            const Residue factor = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                a.set_residue(r, c, submod(a(r, c), mulmod(factor, a(k, c), m), m));
                inv.set_residue(r, c, submod(inv(r, c), mulmod(factor, inv(k, c), m), m));
            }
        }
    }
    return inv;
}

std::int64_t HomologyGroup::length() const {
    std::int64_t total = 0;
    for (int a : factors) total += a;
    return total * multiplicity;
}

std::string HomologyGroup::to_string(std::uint32_t p) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (free_rank > 0) os << "Z_" << p << (free_rank > 1 ? "^" + std::to_string(free_rank) : "");
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k || free_rank > 0) os << " + ";
        os << "(Z/" << p << '^' << factors[k] << ')';
        if (multiplicity > 1) os << '^' << multiplicity;
    }
    return os.str();
}

HomologyGroup homology_at(const PModMatrix& d_in, const PModMatrix& d_out) {
    if (d_out.cols() != d_in.rows()) throw InvalidArgument("differentials do not compose");
    const int N = d_in.precision();
    const std::size_t middle = d_in.rows();
    if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).is_zero())
        throw CompositionNonzero("d_out * d_in is nonzero");

    // Kernel of d_out: columns of `right` whose diagonal entry vanishes mod p^N.
    std::vector<std::size_t> kernel_cols;
    PModMatrix basis_change = PModMatrix::identity(middle, d_in.p(), N);
    if (d_out.rows() > 0 && middle > 0) {
        SNFResult s = snf(d_out);
        for (std::size_t c = 0; c < middle; ++c)
            if (c >= s.diag.size() || s.diag[c] >= N) kernel_cols.push_back(c);
        basis_change = inverse(s.right);
    } else {
        for (std::size_t c = 0; c < middle; ++c) kernel_cols.push_back(c);
    }

    HomologyGroup h;
    if (kernel_cols.empty()) return h;

    PModMatrix image(kernel_cols.size(), d_in.cols(), d_in.p(), N);
    if (d_in.cols() > 0) {
        const PModMatrix coords = basis_change * d_in;
        for (std::size_t r = 0; r < kernel_cols.size(); ++r)
            for (std::size_t c = 0; c < d_in.cols(); ++c) image.set_residue(r, c, coords(kernel_cols[r], c));
    }
    std::vector<int> exps(kernel_cols.size(), N);
    if (d_in.cols() > 0) {
        const SNFResult s = snf(image);
        for (std::size_t k = 0; k < s.diag.size(); ++k) exps[k] = s.diag[k];
    }
    for (int e : exps)
        if (e > 0) {
            h.factors.push_back(e);
            if (e >= N) h.saturated = true;
        }
    std::sort(h.factors.begin(), h.factors.end());
    return h;
}

HomologyGroup group_by_multiplicity(const HomologyGroup& raw, int multiplicity) {
    if (multiplicity <= 1 || raw.multiplicity != 1) return raw;
    std::map<int, int> counts;
    for (int a : raw.factors) ++counts[a];
    for (const auto& [a, n] : counts)
        if (n % multiplicity != 0) return raw;
    HomologyGroup out;
    out.multiplicity = multiplicity;
    out.free_rank = raw.free_rank;
    out.saturated = raw.saturated;
    for (const auto& [a, n] : counts)
        for (int k = 0; k < n / multiplicity; ++k) out.factors.push_back(a);
    return out;
}

}  // namespace syntomic
