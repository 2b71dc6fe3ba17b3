#include "syntomic/witt.hpp"

#include <sstream>
#include <tuple>

#include "syntomic/errors.hpp"

namespace syntomic {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t k = 0; k <= db; ++k)
            a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + (p - c) * b[k]) % p);
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& modulus_low, std::uint32_t p) {
    const int f = static_cast<int>(modulus_low.size());
    if (f <= 1) return true;
    Poly g(modulus_low.begin(), modulus_low.end());
    for (auto& c : g) c %= p;
    g.push_back(1);
    // Trial division by every monic polynomial of degree 1..f/2.
    for (int deg = 1; 2 * deg <= f; ++deg) {
        std::uint64_t count = 1;
        for (int k = 0; k < deg; ++k) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly h(deg + 1, 0);
            std::uint64_t c = code;
            for (int k = 0; k < deg; ++k) {
                h[k] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            h[deg] = 1;
            if (poly_mod(g, h, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, int degree) {
    if (degree < 1) throw InvalidArgument("residue degree must be >= 1");
    std::uint64_t count = 1;
    for (int k = 0; k < degree; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> low(degree);
        std::uint64_t c = code;
        for (int k = 0; k < degree; ++k) {
            low[k] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        if (is_irreducible_mod_p(low, p)) return low;
    }
    throw InvalidArgument("no irreducible polynomial found");
}

WittRing::WittRing(std::uint32_t p, int precision, int degree)
    : WittRing(p, precision, default_modulus(p, degree)) {}

WittRing::WittRing(std::uint32_t p, int precision, std::vector<std::uint32_t> modulus_low)
    : p_(p), N_(precision), f_(static_cast<int>(modulus_low.size())), pN_(1),
      mod_low_(std::move(modulus_low)) {
    if (!is_prime(p)) throw InvalidArgument("p must be prime");
    if (N_ < 1) throw InvalidArgument("precision must be >= 1");
    if (f_ < 1) throw InvalidArgument("residue degree must be >= 1");
    for (int k = 0; k < N_; ++k) {
        if (pN_ > (Residue{1} << 62) / p) throw InvalidArgument("p^N does not fit in 62 bits");
        pN_ *= p;
    }
    for (auto& c : mod_low_) c %= p;
    if (!is_irreducible_mod_p(mod_low_, p)) throw InvalidArgument("modulus is not irreducible mod p");
    init();
}

std::uint64_t WittRing::q() const {
    std::uint64_t r = 1;
    for (int k = 0; k < f_; ++k) r *= p_;
    return r;
}

Residue WittRing::mulmod(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % pN_);
}

WittElem WittRing::zero() const { return WittElem{std::vector<Residue>(f_, 0)}; }

WittElem WittRing::one() const { return from_int(1); }

WittElem WittRing::from_int(std::int64_t n) const {
    WittElem x = zero();
    const auto m = static_cast<std::int64_t>(pN_);
    std::int64_t r = n % m;
    if (r < 0) r += m;
    x.coords[0] = static_cast<Residue>(r);
    return x;
}

WittElem WittRing::from_coords(std::vector<std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) != f_) throw InvalidArgument("coordinate vector has wrong length");
    WittElem x = zero();
    const auto m = static_cast<std::int64_t>(pN_);
    for (int k = 0; k < f_; ++k) {
        std::int64_t r = coords[k] % m;
        if (r < 0) r += m;
        x.coords[k] = static_cast<Residue>(r);
    }
    return x;
}

bool WittRing::is_zero(const WittElem& x) const {
    for (auto c : x.coords)
        if (c != 0) return false;
    return true;
}

WittElem WittRing::add(const WittElem& a, const WittElem& b) const {
    WittElem r = zero();
    for (int k = 0; k < f_; ++k) {
        Residue s = a.coords[k] + b.coords[k];
        r.coords[k] = s >= pN_ ? s - pN_ : s;
    }
    return r;
}

WittElem WittRing::neg(const WittElem& a) const {
    WittElem r = zero();
    for (int k = 0; k < f_; ++k) r.coords[k] = a.coords[k] == 0 ? 0 : pN_ - a.coords[k];
    return r;
}

WittElem WittRing::sub(const WittElem& a, const WittElem& b) const { return add(a, neg(b)); }

WittElem WittRing::scale(const WittElem& a, Residue c) const {
    WittElem r = zero();
    c %= pN_;
    for (int k = 0; k < f_; ++k) r.coords[k] = mulmod(a.coords[k], c);
    return r;
}

WittElem WittRing::mul(const WittElem& a, const WittElem& b) const {
    std::vector<Residue> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < f_; ++j) {
            Residue t = prod[i + j] + mulmod(a.coords[i], b.coords[j]);
            prod[i + j] = t >= pN_ ? t - pN_ : t;
        }
    }
    // t^f = -(c_0 + c_1 t + ... + c_{f-1} t^{f-1})
    for (int k = 2 * f_ - 2; k >= f_; --k) {
        const Residue c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < f_; ++i) {
            const Residue t = mulmod(c, mod_low_[i]);
            Residue& dst = prod[k - f_ + i];
            dst = dst >= t ? dst - t : dst + pN_ - t;
        }
    }
    prod.resize(f_);
    return WittElem{std::move(prod)};
}

WittElem WittRing::pow(WittElem a, std::uint64_t e) const {
    WittElem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int WittRing::valuation(const WittElem& x) const {
    int best = kInfiniteValuation;
    for (auto c : x.coords) {
        if (c == 0) continue;
        int v = 0;
        while (c % p_ == 0) {
            c /= p_;
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

WittElem WittRing::inverse(const WittElem& unit) const {
    if (!is_unit(unit)) throw InvalidArgument("inverse of a non-unit");
    // Inverse mod p via u^{q-2}, then Newton iteration y <- y (2 - u y).
    WittElem y = pow(unit, q() - 2);
    const WittElem two = from_int(2);
    for (int prec = 1; prec < N_; prec *= 2) y = mul(y, sub(two, mul(unit, y)));
    return y;
}

WittElem WittRing::divide_by_p_power(const WittElem& x, int k) const {
    if (k < 0) throw InvalidArgument("negative division exponent");
    if (k == 0) return x;
    if (valuation(x) < k) throw InvalidArgument("element not divisible by requested power of p");
    WittElem r = zero();
    Residue pk = 1;
    for (int j = 0; j < k; ++j) pk *= p_;
    for (int i = 0; i < f_; ++i) r.coords[i] = x.coords[i] / pk;
    return r;
}

WittElem WittRing::eval_modulus(const WittElem& x) const {
    // Horner for T^f + c_{f-1} T^{f-1} + ... + c_0.
    WittElem r = one();
    for (int k = f_ - 1; k >= 0; --k) r = add(mul(r, x), from_int(mod_low_[k]));
    return r;
}

WittElem WittRing::eval_modulus_derivative(const WittElem& x) const {
    WittElem r = from_int(f_);
    for (int k = f_ - 1; k >= 1; --k)
        r = add(mul(r, x), from_int(static_cast<std::int64_t>(k) * mod_low_[k]));
    return r;
}

void WittRing::init() {
    WittElem t = zero();
    if (f_ == 1) {
        t.coords[0] = static_cast<Residue>((p_ - mod_low_[0]) % p_);
    } else {
        t.coords[1] = 1;
    }
    // Hensel lift of the root of the modulus congruent to t^p.
    WittElem theta = pow(t, p_);
    for (int iter = 0; iter < 2 * N_ + 2; ++iter) {
        const WittElem g = eval_modulus(theta);
        if (is_zero(g)) break;
        theta = sub(theta, mul(g, inverse(eval_modulus_derivative(theta))));
    }
    if (!is_zero(eval_modulus(theta))) throw Error("Hensel lift of Frobenius failed to converge");

    frob_.assign(f_, std::vector<Residue>(f_, 0));
    WittElem power = one();
    for (int k = 0; k < f_; ++k) {
        for (int r = 0; r < f_; ++r) frob_[r][k] = power.coords[r];
        power = mul(power, theta);
    }
    // F^{-1} = F^{f-1} since F^f fixes Z_q.
    frob_inv_.assign(f_, std::vector<Residue>(f_, 0));
    for (int k = 0; k < f_; ++k) {
        WittElem e = zero();
        e.coords[k] = 1;
        for (int s = 0; s + 1 < f_; ++s) e = frobenius(e);
        for (int r = 0; r < f_; ++r) frob_inv_[r][k] = e.coords[r];
    }
}

WittElem WittRing::frobenius(const WittElem& x) const {
    WittElem r = zero();
    for (int row = 0; row < f_; ++row) {
        Residue acc = 0;
        for (int k = 0; k < f_; ++k) acc = (acc + mulmod(frob_[row][k], x.coords[k])) % pN_;
        r.coords[row] = acc;
    }
    return r;
}

WittElem WittRing::frobenius_inverse(const WittElem& x) const {
    WittElem r = zero();
    for (int row = 0; row < f_; ++row) {
        Residue acc = 0;
        for (int k = 0; k < f_; ++k) acc = (acc + mulmod(frob_inv_[row][k], x.coords[k])) % pN_;
        r.coords[row] = acc;
    }
    return r;
}

WittElem WittRing::verschiebung(const WittElem& x) const { return scale(frobenius_inverse(x), p_); }

std::vector<std::vector<Residue>> WittRing::multiplication_matrix(const WittElem& c) const {
    std::vector<std::vector<Residue>> m(f_, std::vector<Residue>(f_, 0));
    for (int k = 0; k < f_; ++k) {
        WittElem e = zero();
        e.coords[k] = 1;
        const WittElem col = mul(c, e);
        for (int r = 0; r < f_; ++r) m[r][k] = col.coords[r];
    }
    return m;
}

FieldElem WittRing::residue(const WittElem& x) const {
    FieldElem a(f_);
    for (int k = 0; k < f_; ++k) a[k] = static_cast<std::uint32_t>(x.coords[k] % p_);
    return a;
}

WittElem WittRing::naive_lift(const FieldElem& a) const {
    if (static_cast<int>(a.size()) != f_) throw InvalidArgument("residue element has wrong length");
    WittElem x = zero();
    for (int k = 0; k < f_; ++k) x.coords[k] = a[k] % p_;
    return x;
}

FieldElem WittRing::residue_mul(const FieldElem& a, const FieldElem& b) const {
    return residue(mul(naive_lift(a), naive_lift(b)));
}

FieldElem WittRing::residue_pow(const FieldElem& a, std::uint64_t e) const {
    return residue(pow(naive_lift(a), e));
}

bool WittRing::residue_is_zero(const FieldElem& a) const {
    for (auto c : a)
        if (c % p_ != 0) return false;
    return true;
}

WittElem WittRing::teichmuller(const FieldElem& a) const {
    WittElem x = naive_lift(a);
    const std::uint64_t qq = q();
    // Each application of x -> x^q gains one p-adic digit of accuracy.
    for (int k = 0; k < N_ + 1; ++k) {
        WittElem next = pow(x, qq);
        if (next == x) break;
        x = std::move(next);
    }
    return x;
}

std::vector<FieldElem> WittRing::to_witt_coords(const WittElem& x) const {
    std::vector<FieldElem> out;
    out.reserve(N_);
    WittElem cur = x;
    for (int n = 0; n < N_; ++n) {
        const FieldElem a = residue(cur);
        out.push_back(a);
        if (n + 1 == N_) break;
        // cur - [a] = V(y) with y = F(cur - [a]) / p.
        const WittElem rest = sub(cur, teichmuller(a));
        cur = divide_by_p_power(frobenius(rest), 1);
    }
    return out;
}

WittElem WittRing::from_witt_coords(const std::vector<FieldElem>& coords) const {
    if (static_cast<int>(coords.size()) != N_) throw InvalidArgument("expected N Witt coordinates");
    // sum_n V^n [a_n], evaluated by Horner: x = [a_0] + V([a_1] + V([a_2] + ...)).
    WittElem x = zero();
    for (int n = N_ - 1; n >= 0; --n) x = add(teichmuller(coords[n]), verschiebung(x));
    return x;
}

std::string WittRing::to_string(const WittElem& x) const {
    std::ostringstream os;
    for (int k = 0; k < f_; ++k) {
        if (k) os << " + ";
        os << x.coords[k];
        if (k == 1) os << "*t";
        if (k > 1) os << "*t^" << k;
    }
    return os.str();
}

std::int64_t legendre_valuation(std::uint64_t j, std::uint32_t p) {
    std::uint64_t digit_sum = 0;
    for (std::uint64_t n = j; n; n /= p) digit_sum += n % p;
    return static_cast<std::int64_t>((j - digit_sum) / (p - 1));
}

WittElem ValScalar::value(const WittRing& ring) const {
    if (is_zero() || v >= ring.precision()) return ring.zero();
    Residue pv = 1;
    for (std::int64_t k = 0; k < v; ++k) pv *= ring.p();
    return ring.scale(u, pv);
}

ValScalar ValScalar::zero() { return ValScalar{}; }

ValScalar ValScalar::unit_power(const WittRing& ring, std::int64_t v) { return ValScalar{v, ring.one()}; }

ValScalar ValScalar::from_integer(const WittRing& ring, std::int64_t n) {
    if (n == 0) return zero();
    std::int64_t v = 0;
    while (n % static_cast<std::int64_t>(ring.p()) == 0) {
        n /= static_cast<std::int64_t>(ring.p());
        ++v;
    }
    return ValScalar{v, ring.from_int(n)};
}

ValScalar multiply(const WittRing& ring, const ValScalar& a, const ValScalar& b) {
    if (a.is_zero() || b.is_zero()) return ValScalar::zero();
    return ValScalar{a.v + b.v, ring.mul(a.u, b.u)};
}

ValScalar shift(const ValScalar& a, std::int64_t k) {
    if (a.is_zero()) return a;
    return ValScalar{a.v + k, a.u};
}

bool same_value(const WittRing& ring, const ValScalar& a, const ValScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.v == b.v && a.u == b.u && ring.is_unit(a.u);
}

ValScalar factorial_ratio(std::uint64_t j_hi, std::uint64_t j_lo, const WittRing& ring) {
    if (j_hi < j_lo) throw InvalidArgument("factorial_ratio requires j_hi >= j_lo");
    const std::uint32_t p = ring.p();
    const Residue m = ring.modulus();
    Residue unit = 1 % m;
    for (std::uint64_t k = j_lo + 1; k <= j_hi; ++k) {
        std::uint64_t c = k;
        while (c % p == 0) c /= p;
        unit = static_cast<Residue>((static_cast<unsigned __int128>(unit) * (c % m)) % m);
    }
    return ValScalar{legendre_valuation(j_hi, p) - legendre_valuation(j_lo, p), ring.from_int(static_cast<std::int64_t>(unit))};
}

FactorialTable::FactorialTable(const WittRing& ring, std::uint64_t j_max)
    : ring_(&ring), valuation_(j_max + 1, 0), unit_(j_max + 1, 1 % ring.modulus()), unit_inverse_(j_max + 1) {
    const std::uint32_t p = ring.p();
    const Residue m = ring.modulus();
    auto mulmod = [m](Residue a, Residue b) { return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m); };
    for (std::uint64_t k = 1; k <= j_max; ++k) {
        std::uint64_t c = k;
        std::int64_t v = 0;
        for (; c % p == 0; c /= p) ++v;
        valuation_[k] = valuation_[k - 1] + v;
        unit_[k] = mulmod(unit_[k - 1], c % m);
    }
    // One modular inverse at the top, then walk down.
    std::int64_t a = static_cast<std::int64_t>(unit_[j_max]), b = static_cast<std::int64_t>(m);
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    unit_inverse_[j_max] = static_cast<Residue>((x0 % static_cast<std::int64_t>(m) + static_cast<std::int64_t>(m)) % static_cast<std::int64_t>(m));
    for (std::uint64_t k = j_max; k >= 1; --k) {
        std::uint64_t c = k;
        while (c % p == 0) c /= p;
        unit_inverse_[k - 1] = mulmod(unit_inverse_[k], c % m);
    }
}

ValScalar FactorialTable::ratio(std::uint64_t j_hi, std::uint64_t j_lo) const {
    if (j_hi < j_lo) throw InvalidArgument("factorial ratio requires j_hi >= j_lo");
    if (j_hi > j_max()) throw InvalidArgument("factorial table too small");
    const Residue m = ring_->modulus();
    const Residue u = static_cast<Residue>((static_cast<unsigned __int128>(unit_[j_hi]) * unit_inverse_[j_lo]) % m);
    return ValScalar{valuation_[j_hi] - valuation_[j_lo], ring_->from_int(static_cast<std::int64_t>(u))};
}

}  // namespace syntomic
