#include "klein/scalar.hpp"

#include <cstdio>

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace klein {

namespace {

std::atomic<long> g_initial_bits{0};

long clamp_bits(long v) { return std::clamp(v, 16L, 1L << 20); }

long read_env_bits() {
    const char* s = std::getenv("HYP_PRECISION_BITS");
    if (s == nullptr || *s == '\0') return 64;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s) return 64;
    return clamp_bits(v);
}

}  // namespace

long initial_precision_bits() {
    long v = g_initial_bits.load(std::memory_order_relaxed);
    if (v == 0) {
        v = read_env_bits();
        g_initial_bits.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_initial_precision_bits(long bits) {
    g_initial_bits.store(clamp_bits(bits), std::memory_order_relaxed);
}

Rat rat_from(long num, long den) {
    return rat_from(mpz_class(num), mpz_class(den));
}

Rat rat_from(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw error(errc::construction, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace detail {

class Big {
  public:
    Big() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Big(mpfr_prec_t p) { mpfr_init2(v_, p); mpfr_set_zero(v_, 1); }
    Big(const Big& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Big(Big&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Big& operator=(Big o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Big() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

  private:
    mpfr_t v_;
};

struct Ival {
    Big lo, hi;
};

enum class Op : unsigned char { leaf, add, sub, mul, div, sqrt_ };

// Sorted list of radical ids; the empty list marks the rational term.
using Mono = std::vector<std::uint32_t>;

// Exact symbolic form: a finite sum of rational multiples of products of
// registered radicals.  Values of this shape cover the whole square-root
// closure our geometry produces, so zero tests reduce to coefficient checks.
struct NForm {
    std::map<Mono, Rat> terms;
};

struct Node {
    Op op = Op::leaf;
    Rat value;  // leaf payload
    std::shared_ptr<const Node> a, b;

    mutable std::mutex mu;
    mutable mpfr_prec_t cached_prec = 0;
    mutable Ival cached;
    mutable int cached_sign = 2;  // 2 = not yet known
    mutable std::shared_ptr<const NForm> nf;
    mutable std::shared_ptr<const Node> compact;  // small tree rebuilt from nf
};

}  // namespace detail

namespace {

using detail::Big;
using detail::Ival;
using detail::Mono;
using detail::NForm;
using detail::Node;
using detail::Op;

double bits_of(const mpz_class& z) {
    if (z == 0) return 0.0;
    return static_cast<double>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

std::shared_ptr<const Node> make_leaf(Rat q) {
    q.canonicalize();
    auto n = std::make_shared<Node>();
    n->op = Op::leaf;
    n->value = std::move(q);
    return n;
}

bool is_leaf_value(const Node* n, long v) {
    return n->op == Op::leaf && n->value == v;
}

Ival eval(const Node* n, mpfr_prec_t p);

// Refine until the enclosure excludes zero.  The caller guarantees the exact
// value is nonzero, so this terminates.
Ival eval_nonzero(const Node* n, mpfr_prec_t p) {
    mpfr_prec_t q = p;
    for (;;) {
        Ival iv = eval(n, q);
        if (mpfr_sgn(iv.lo.get()) > 0 || mpfr_sgn(iv.hi.get()) < 0) return iv;
        q *= 2;
    }
}

Ival eval(const Node* n, mpfr_prec_t p) {
    {
        std::lock_guard lk(n->mu);
        if (n->cached_prec >= p) return n->cached;
    }
    Ival out;
    out.lo = Big(p);
    out.hi = Big(p);
    switch (n->op) {
        case Op::leaf:
            mpfr_set_q(out.lo.get(), n->value.get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(out.hi.get(), n->value.get_mpq_t(), MPFR_RNDU);
            break;
        case Op::add: {
            Ival A = eval(n->a.get(), p), B = eval(n->b.get(), p);
            mpfr_add(out.lo.get(), A.lo.get(), B.lo.get(), MPFR_RNDD);
            mpfr_add(out.hi.get(), A.hi.get(), B.hi.get(), MPFR_RNDU);
            break;
        }
        case Op::sub: {
            Ival A = eval(n->a.get(), p), B = eval(n->b.get(), p);
            mpfr_sub(out.lo.get(), A.lo.get(), B.hi.get(), MPFR_RNDD);
            mpfr_sub(out.hi.get(), A.hi.get(), B.lo.get(), MPFR_RNDU);
            break;
        }
        case Op::mul: {
            Ival A = eval(n->a.get(), p), B = eval(n->b.get(), p);
            Big t(p);
            bool first = true;
            for (const Big* x : {&A.lo, &A.hi}) {
                for (const Big* y : {&B.lo, &B.hi}) {
                    mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
                    if (first || mpfr_cmp(t.get(), out.lo.get()) < 0)
                        mpfr_set(out.lo.get(), t.get(), MPFR_RNDD);
                    mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
                    if (first || mpfr_cmp(t.get(), out.hi.get()) > 0)
                        mpfr_set(out.hi.get(), t.get(), MPFR_RNDU);
                    first = false;
                }
            }
            break;
        }
        case Op::div: {
            Ival A = eval(n->a.get(), p);
            Ival B = eval_nonzero(n->b.get(), p);
            Big t(p);
            bool first = true;
            for (const Big* x : {&A.lo, &A.hi}) {
                for (const Big* y : {&B.lo, &B.hi}) {
                    mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
                    if (first || mpfr_cmp(t.get(), out.lo.get()) < 0)
                        mpfr_set(out.lo.get(), t.get(), MPFR_RNDD);
                    mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
                    if (first || mpfr_cmp(t.get(), out.hi.get()) > 0)
                        mpfr_set(out.hi.get(), t.get(), MPFR_RNDU);
                    first = false;
                }
            }
            break;
        }
        case Op::sqrt_: {
            Ival A = eval(n->a.get(), p);
            if (mpfr_sgn(A.lo.get()) < 0) mpfr_set_zero(A.lo.get(), 1);
            mpfr_sqrt(out.lo.get(), A.lo.get(), MPFR_RNDD);
            mpfr_sqrt(out.hi.get(), A.hi.get(), MPFR_RNDU);
            break;
        }
    }
    std::lock_guard lk(n->mu);
    if (p > n->cached_prec) {
        n->cached_prec = p;
        n->cached = out;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Radical registry.  Every sqrt that does not simplify away is entered here
// exactly once, keyed by a canonical form of its radicand.  Radicands are
// either positive integers or earlier-registered combinations, and each new
// entry is adjoined only after we fail to express its square root over the
// existing entries, which keeps products of distinct radicals linearly
// independent and makes the normal forms faithful.
// ---------------------------------------------------------------------------

struct Radical {
    bool is_integer = false;
    mpz_class n;      // radicand for integer entries
    NForm radicand;   // radicand over earlier ids
    std::shared_ptr<const Node> node;  // for numeric evaluation
};

std::recursive_mutex g_tower_mu;
std::deque<Radical> g_radicals;
std::map<std::string, std::uint32_t> g_radical_by_key;
std::map<std::string, NForm> g_denest_memo;

NForm radicand_copy(std::uint32_t id) {
    std::lock_guard lk(g_tower_mu);
    return g_radicals[id].radicand;
}

bool is_integer_radical(std::uint32_t id) {
    std::lock_guard lk(g_tower_mu);
    return g_radicals[id].is_integer;
}

// ---------------------------------------------------------------------------
// Normal form arithmetic.
// ---------------------------------------------------------------------------

NForm nf_rational(Rat q) {
    NForm f;
    q.canonicalize();
    if (q != 0) f.terms.emplace(Mono{}, std::move(q));
    return f;
}

NForm nf_single(Mono m, Rat c) {
    NForm f;
    if (c != 0) f.terms.emplace(std::move(m), std::move(c));
    return f;
}

bool nf_is_plain_rational(const NForm& f) {
    return f.terms.empty() || (f.terms.size() == 1 && f.terms.begin()->first.empty());
}

Rat nf_plain_rational_value(const NForm& f) {
    return f.terms.empty() ? Rat(0) : f.terms.begin()->second;
}

void nf_accumulate(NForm& out, const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
        out.terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
    }
}

NForm nf_add(const NForm& a, const NForm& b) {
    NForm out = a;
    for (const auto& [m, c] : b.terms) nf_accumulate(out, m, c);
    return out;
}

NForm nf_neg(const NForm& a) {
    NForm out;
    for (const auto& [m, c] : a.terms) out.terms.emplace(m, -c);
    return out;
}

NForm nf_sub(const NForm& a, const NForm& b) { return nf_add(a, nf_neg(b)); }

NForm nf_scale(const NForm& a, const Rat& c) {
    NForm out;
    if (c == 0) return out;
    for (const auto& [m, q] : a.terms) out.terms.emplace(m, q * c);
    return out;
}

void mono_split(const Mono& a, const Mono& b, Mono& shared, Mono& sym) {
    shared.clear();
    sym.clear();
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            shared.push_back(a[i]);
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            sym.push_back(a[i++]);
        } else {
            sym.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) sym.push_back(a[i]);
    for (; j < b.size(); ++j) sym.push_back(b[j]);
}

NForm nf_mul(const NForm& a, const NForm& b) {
    NForm out;
    Mono shared, sym;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            mono_split(ma, mb, shared, sym);
            Rat c = ca * cb;
            if (shared.empty()) {
                nf_accumulate(out, sym, c);
                continue;
            }
            // squared radicals fold back into their radicands
            NForm piece = nf_single(sym, c);
            for (std::uint32_t id : shared) piece = nf_mul(piece, radicand_copy(id));
            for (const auto& [m2, c2] : piece.terms) nf_accumulate(out, m2, c2);
        }
    }
    return out;
}

void nf_split_by(const NForm& a, std::uint32_t h, NForm& without, NForm& with) {
    without.terms.clear();
    with.terms.clear();
    for (const auto& [m, c] : a.terms) {
        if (std::binary_search(m.begin(), m.end(), h)) {
            Mono stripped;
            stripped.reserve(m.size() - 1);
            for (std::uint32_t id : m)
                if (id != h) stripped.push_back(id);
            with.terms.emplace(std::move(stripped), c);
        } else {
            without.terms.emplace(m, c);
        }
    }
}

// Exact zero test for the value of a normal form, sound even when distinct
// radical entries are algebraically dependent.  Defined after the canonical
// rewriting machinery below.
bool nf_value_is_zero(const NForm& f);

NForm nf_inv(const NForm& a) {
    if (a.terms.empty()) throw error(errc::arithmetic, "inverse of exact zero");
    if (nf_is_plain_rational(a)) return nf_rational(Rat(1) / nf_plain_rational_value(a));
    if (a.terms.size() == 1) {
        const auto& [m, c] = *a.terms.begin();
        NForm out = nf_single(m, Rat(1) / c);
        for (std::uint32_t id : m) out = nf_mul(out, nf_inv(radicand_copy(id)));
        return out;
    }
    std::uint32_t h = 0;
    for (const auto& [m, c] : a.terms)
        if (!m.empty()) h = std::max(h, m.back());
    NForm p, q;
    nf_split_by(a, h, p, q);
    NForm conj = p;
    for (const auto& [m, c] : q.terms) {
        Mono back = m;
        back.insert(std::upper_bound(back.begin(), back.end(), h), h);
        conj.terms.emplace(std::move(back), -c);
    }
    NForm norm = nf_sub(nf_mul(p, p), nf_mul(nf_mul(q, q), radicand_copy(h)));
    // norm = a * conj.  When it vanishes either a itself is zero or the
    // conjugate is; in the latter case a = 2p and the inverse recurses on a
    // strictly smaller radical support.
    if (nf_value_is_zero(norm)) {
        if (nf_value_is_zero(a)) throw error(errc::arithmetic, "inverse of exact zero");
        return nf_inv(nf_scale(p, Rat(2)));
    }
    return nf_mul(conj, nf_inv(norm));
}

// ---------------------------------------------------------------------------
// Canonical rewriting.  Integer radicals are re-expressed over the finest
// gcd-free basis generated by the radicands that actually occur in a value,
// which resolves every multiplicative relation among them.
// ---------------------------------------------------------------------------

std::vector<mpz_class> gcd_free_basis(std::vector<mpz_class> work) {
    std::vector<mpz_class> basis;
    long guard = 0;
    while (!work.empty()) {
        if (++guard > 200000) throw error(errc::arithmetic, "radical basis refinement stalled");
        mpz_class n = std::move(work.back());
        work.pop_back();
        if (n == 1) continue;
        bool placed = true;
        for (size_t i = 0; i < basis.size(); ++i) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), basis[i].get_mpz_t());
            if (g == 1) continue;
            if (g == basis[i]) {
                while (mpz_divisible_p(n.get_mpz_t(), basis[i].get_mpz_t())) n /= basis[i];
                work.push_back(std::move(n));
            } else {
                mpz_class b = basis[i];
                basis.erase(basis.begin() + static_cast<long>(i));
                work.push_back(b / g);
                work.push_back(g);
                work.push_back(std::move(n));
            }
            placed = false;
            break;
        }
        if (placed) basis.push_back(std::move(n));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

// Multiplicative relations among the small integer radicals, maintained
// incrementally: a pairwise coprime basis of the radicands seen so far plus a
// GF(2) row echelon of their parity vectors.  Answers "is sqrt(n) a rational
// multiple of a product of existing radicals" with one row reduction instead
// of refining a basis from scratch on every query.  The linear algebra only
// proposes candidates; every answer is verified by an exact square test.
struct IntRelations {
    struct Row {
        std::vector<std::uint64_t> cols;  // parity over basis entries
        std::vector<std::uint64_t> comb;  // member subset producing the row
        std::size_t pivot = 0;
    };

    std::vector<mpz_class> basis;  // pairwise coprime; entries may be squares
    std::vector<char> is_square;
    std::vector<std::pair<std::uint32_t, mpz_class>> members;  // radical id, radicand
    std::vector<Row> ech;  // ascending pivots
    bool dirty = false;    // a basis split invalidated the stored rows

    static void flip_bit(std::vector<std::uint64_t>& v, std::size_t i) {
        if (i / 64 >= v.size()) v.resize(i / 64 + 1, 0);
        v[i / 64] ^= std::uint64_t(1) << (i % 64);
    }
    static bool test_bit(const std::vector<std::uint64_t>& v, std::size_t i) {
        return i / 64 < v.size() && ((v[i / 64] >> (i % 64)) & 1) != 0;
    }
    static void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
    }
    static bool nonzero(const std::vector<std::uint64_t>& v) {
        for (std::uint64_t w : v)
            if (w) return true;
        return false;
    }
    static std::size_t lowest_bit(const std::vector<std::uint64_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(v[i]));
        return 0;
    }

    // Refines the basis so n factors over it.  A fresh coprime entry keeps
    // existing rows valid (older members have zero parity on it); splitting
    // an entry does not, which flags a rebuild.
    void absorb(const mpz_class& n0) {
        std::vector<mpz_class> queue{n0};
        while (!queue.empty()) {
            mpz_class n = std::move(queue.back());
            queue.pop_back();
            if (n == 1) continue;
            bool placed = true;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), basis[i].get_mpz_t());
                if (g == 1) continue;
                if (g == basis[i]) {
                    while (mpz_divisible_p(n.get_mpz_t(), g.get_mpz_t())) n /= g;
                    queue.push_back(std::move(n));
                } else {
                    mpz_class b = std::move(basis[i]);
                    basis.erase(basis.begin() + static_cast<long>(i));
                    is_square.erase(is_square.begin() + static_cast<long>(i));
                    dirty = true;
                    queue.push_back(b / g);
                    queue.push_back(std::move(g));
                    queue.push_back(std::move(n));
                }
                placed = false;
                break;
            }
            if (placed) {
                basis.push_back(std::move(n));
                is_square.push_back(mpz_perfect_square_p(basis.back().get_mpz_t()) != 0);
            }
        }
    }

    // Parity of v over the non-square basis entries.  Square entries carry no
    // constraint, their square roots being rational.
    std::vector<std::uint64_t> parity_row(const mpz_class& v) const {
        std::vector<std::uint64_t> row;
        mpz_class rest = v;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool odd = false;
            while (mpz_divisible_p(rest.get_mpz_t(), basis[i].get_mpz_t())) {
                rest /= basis[i];
                odd = !odd;
            }
            if (odd && !is_square[i]) flip_bit(row, i);
        }
        return row;
    }

    void reduce(std::vector<std::uint64_t>& row, std::vector<std::uint64_t>& comb) const {
        for (const Row& r : ech)
            if (test_bit(row, r.pivot)) {
                xor_into(row, r.cols);
                xor_into(comb, r.comb);
            }
    }

    void insert_member_row(std::size_t idx) {
        std::vector<std::uint64_t> row = parity_row(members[idx].second);
        std::vector<std::uint64_t> comb;
        flip_bit(comb, idx);
        reduce(row, comb);
        if (!nonzero(row)) return;  // dependent radical, spanned already
        Row r{std::move(row), std::move(comb), 0};
        r.pivot = lowest_bit(r.cols);
        auto pos = std::lower_bound(ech.begin(), ech.end(), r.pivot,
                                    [](const Row& a, std::size_t p) { return a.pivot < p; });
        ech.insert(pos, std::move(r));
    }

    void rebuild() {
        ech.clear();
        dirty = false;
        for (std::size_t i = 0; i < members.size(); ++i) insert_member_row(i);
    }

    void add(std::uint32_t id, const mpz_class& n) {
        absorb(n);
        members.emplace_back(id, n);
        if (dirty)
            rebuild();
        else
            insert_member_row(members.size() - 1);
    }

    // sqrt(n) = k * prod of sqrt over the returned ids, when such a relation
    // exists.
    std::optional<std::pair<Mono, Rat>> solve(const mpz_class& n) {
        absorb(n);
        if (dirty) rebuild();
        std::vector<std::uint64_t> row = parity_row(n);
        std::vector<std::uint64_t> comb;
        reduce(row, comb);
        if (nonzero(row)) return std::nullopt;
        Mono mono;
        mpz_class prod = 1;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (test_bit(comb, i)) {
                mono.push_back(members[i].first);
                prod *= members[i].second;
            }
        if (mono.empty()) return std::nullopt;
        Rat ratio = rat_from(prod, n);
        if (!mpz_perfect_square_p(ratio.get_num().get_mpz_t()) ||
            !mpz_perfect_square_p(ratio.get_den().get_mpz_t()))
            return std::nullopt;
        mpz_class kn, kd;
        mpz_sqrt(kn.get_mpz_t(), ratio.get_num().get_mpz_t());
        mpz_sqrt(kd.get_mpz_t(), ratio.get_den().get_mpz_t());
        std::sort(mono.begin(), mono.end());
        return std::make_pair(std::move(mono), rat_from(kd, kn));
    }
};

IntRelations g_int_relations;

struct CanonMono {
    std::vector<mpz_class> ints;        // basis integers with odd exponent
    std::vector<std::uint32_t> opaque;  // non-integer radical ids

    bool operator<(const CanonMono& o) const {
        if (ints != o.ints) return ints < o.ints;
        return opaque < o.opaque;
    }
    bool empty() const { return ints.empty() && opaque.empty(); }
};

using CanonNF = std::map<CanonMono, Rat>;

void canon_accumulate(CanonNF& out, CanonMono m, const Rat& c) {
    if (c == 0) return;
    auto it = out.find(m);
    if (it == out.end()) {
        out.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

CanonNF canonicalize(const NForm& f) {
    std::lock_guard lk(g_tower_mu);
    std::vector<mpz_class> gens;
    for (const auto& [m, c] : f.terms)
        for (std::uint32_t id : m)
            if (g_radicals[id].is_integer) gens.push_back(g_radicals[id].n);
    std::vector<mpz_class> basis = gcd_free_basis(std::move(gens));

    CanonNF out;
    for (const auto& [m, c] : f.terms) {
        Rat coeff = c;
        std::map<mpz_class, unsigned long> expo;
        CanonMono cm;
        for (std::uint32_t id : m) {
            if (!g_radicals[id].is_integer) {
                cm.opaque.push_back(id);
                continue;
            }
            mpz_class n = g_radicals[id].n;
            for (const mpz_class& b : basis) {
                while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
                    n /= b;
                    ++expo[b];
                }
            }
            if (n != 1) throw error(errc::arithmetic, "radical basis decomposition failed");
        }
        for (auto& [b, e] : expo) {
            if (e >= 2) {
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), e / 2);
                coeff *= Rat(pw);
            }
            if (e % 2 == 1) {
                if (mpz_perfect_square_p(b.get_mpz_t())) {
                    mpz_class r;
                    mpz_sqrt(r.get_mpz_t(), b.get_mpz_t());
                    coeff *= Rat(r);
                } else {
                    cm.ints.push_back(b);
                }
            }
        }
        std::sort(cm.ints.begin(), cm.ints.end());
        canon_accumulate(out, std::move(cm), coeff);
    }
    return out;
}

bool nf_is_zero(const NForm& f) { return nf_value_is_zero(f); }

std::string canon_key(const CanonNF& f) {
    std::string s;
    for (const auto& [m, c] : f) {
        s += '[';
        for (const mpz_class& b : m.ints) {
            s += b.get_str();
            s += ',';
        }
        s += '|';
        for (std::uint32_t id : m.opaque) {
            s += std::to_string(id);
            s += ',';
        }
        s += ']';
        s += c.get_str();
        s += ';';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Numeric sign of a small rebuilt expression; the value is known nonzero, so
// interval refinement terminates.
// ---------------------------------------------------------------------------

std::shared_ptr<const Node> raw_binary(Op op, std::shared_ptr<const Node> a,
                                       std::shared_ptr<const Node> b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

std::shared_ptr<const Node> raw_sqrt(std::shared_ptr<const Node> a) {
    auto n = std::make_shared<Node>();
    n->op = Op::sqrt_;
    n->a = std::move(a);
    return n;
}

std::shared_ptr<const Node> int_radical_node(const mpz_class& b) {
    return raw_sqrt(make_leaf(Rat(b)));
}

std::shared_ptr<const Node> dag_of_canon(const CanonNF& f) {
    std::lock_guard lk(g_tower_mu);
    std::shared_ptr<const Node> sum;
    for (const auto& [m, c] : f) {
        std::shared_ptr<const Node> term = make_leaf(c);
        for (const mpz_class& b : m.ints) term = raw_binary(Op::mul, term, int_radical_node(b));
        for (std::uint32_t id : m.opaque)
            term = raw_binary(Op::mul, term, g_radicals[id].node);
        sum = sum ? raw_binary(Op::add, sum, term) : term;
    }
    return sum ? sum : make_leaf(Rat(0));
}

std::shared_ptr<const Node> dag_of_nf(const NForm& f) {
    std::lock_guard lk(g_tower_mu);
    std::shared_ptr<const Node> sum;
    for (const auto& [m, c] : f.terms) {
        std::shared_ptr<const Node> term = make_leaf(c);
        for (std::uint32_t id : m) term = raw_binary(Op::mul, term, g_radicals[id].node);
        sum = sum ? raw_binary(Op::add, sum, term) : term;
    }
    return sum ? sum : make_leaf(Rat(0));
}

int sign_of_nonzero_node(const Node* n) {
    for (mpfr_prec_t p = 64;; p *= 2) {
        Ival iv = eval(n, p);
        if (mpfr_sgn(iv.lo.get()) > 0) return 1;
        if (mpfr_sgn(iv.hi.get()) < 0) return -1;
        if (p > (1L << 24)) throw error(errc::arithmetic, "sign refinement stalled");
    }
}

// The tower makes no independence promise across entries: a value can admit
// several distinct representations, so literal cancellation alone must not
// decide zero.  This test is exact.  Writing f = p + q*r for the largest
// non-integer radical r, f * (p - q*r) eliminates r; the product vanishing
// forces f or its conjugate to vanish, and interval refinement separates the
// two cases since at least one of them is then provably nonzero.  Integer
// radicals at the bottom reduce over a gcd-free basis, where cancellation is
// faithful.
bool nf_value_is_zero(const NForm& f) {
    if (f.terms.empty()) return true;
    {
        auto dag = dag_of_nf(f);
        Ival iv = eval(dag.get(), 256);
        if (mpfr_sgn(iv.lo.get()) > 0 || mpfr_sgn(iv.hi.get()) < 0) return false;
    }
    std::uint32_t h = 0;
    bool has_opaque = false;
    {
        std::lock_guard lk(g_tower_mu);
        for (const auto& [m, c] : f.terms)
            for (std::uint32_t id : m)
                if (!g_radicals[id].is_integer && (!has_opaque || id > h)) {
                    has_opaque = true;
                    h = id;
                }
    }
    if (!has_opaque) return canonicalize(f).empty();
    NForm p, q;
    nf_split_by(f, h, p, q);
    NForm norm = nf_sub(nf_mul(p, p), nf_mul(nf_mul(q, q), radicand_copy(h)));
    if (!nf_value_is_zero(norm)) return false;
    if (nf_value_is_zero(p)) return true;
    NForm conj = p;
    for (const auto& [m, c] : q.terms) {
        Mono back = m;
        back.insert(std::upper_bound(back.begin(), back.end(), h), h);
        conj.terms.emplace(std::move(back), -c);
    }
    auto fd = dag_of_nf(f);
    auto cd = dag_of_nf(conj);
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        Ival a = eval(fd.get(), prec);
        if (mpfr_sgn(a.lo.get()) > 0 || mpfr_sgn(a.hi.get()) < 0) return false;
        Ival b = eval(cd.get(), prec);
        if (mpfr_sgn(b.lo.get()) > 0 || mpfr_sgn(b.hi.get()) < 0) return true;
        if (prec > (1L << 24)) throw error(errc::arithmetic, "exact zero test stalled");
    }
}

int nf_sign(const NForm& f) {
    CanonNF can = canonicalize(f);
    if (can.empty()) return 0;
    bool any_pos = false, any_neg = false;
    for (const auto& [m, c] : can) (sgn(c) > 0 ? any_pos : any_neg) = true;
    if (!any_neg) return 1;  // radicals are positive reals
    if (!any_pos) return -1;
    if (nf_value_is_zero(f)) return 0;
    auto dag = dag_of_canon(can);
    return sign_of_nonzero_node(dag.get());
}

// ---------------------------------------------------------------------------
// Square roots inside the tower: exact denesting where possible, otherwise a
// fresh radical.
// ---------------------------------------------------------------------------

// Total size of a form in bits, capped; a cheap cost probe for search gates.
long nf_bits(const NForm& f, long cap) {
    long bits = 0;
    for (const auto& [m, c] : f.terms) {
        bits += static_cast<long>(mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
        bits += static_cast<long>(mpz_sizeinbase(c.get_den().get_mpz_t(), 2));
        bits += 8 * static_cast<long>(m.size());
        if (bits > cap) return bits;
    }
    return bits;
}

struct RootSearch {
    long budget = 200000;

    // Exact square root of a over the first `levels` radicals, if one exists.
    // The search is an optimisation that keeps towers flat; callers must work
    // whether or not it succeeds, so expensive branches are skipped by size.
    std::optional<NForm> find(const NForm& a, std::uint32_t levels) {
        if (--budget < 0) return std::nullopt;
        if (a.terms.empty()) return NForm{};
        if (levels == 0) {
            if (!nf_is_plain_rational(a)) return std::nullopt;
            Rat q = nf_plain_rational_value(a);
            if (q < 0) return std::nullopt;
            if (mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
                mpz_perfect_square_p(q.get_den().get_mpz_t())) {
                mpz_class rn, rd;
                mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
                mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
                return nf_rational(rat_from(rn, rd));
            }
            return std::nullopt;
        }
        std::uint32_t h = levels - 1;
        NForm p, q;
        nf_split_by(a, h, p, q);
        if (q.terms.empty()) {
            if (auto r = find(a, h)) return r;
            // sqrt(a) may involve an absent radical through a product
            // relation.  Probing every level branches exponentially, so the
            // probe is limited to small opaque radicands; subset relations
            // among integer radicals are the parity solver's job.
            if (is_integer_radical(h)) return std::nullopt;
            NForm rad = radicand_copy(h);
            if (nf_bits(rad, 128) > 128 || rad.terms.size() > 2) return std::nullopt;
            NForm shifted = nf_mul(a, nf_inv(rad));
            if (auto r = find(shifted, h)) return nf_mul(*r, nf_single(Mono{h}, Rat(1)));
            return std::nullopt;
        }
        NForm disc = nf_sub(nf_mul(p, p), nf_mul(nf_mul(q, q), radicand_copy(h)));
        auto d = find(disc, h);
        if (!d) return std::nullopt;
        for (const NForm& dd : {*d, nf_neg(*d)}) {
            NForm x2 = nf_scale(nf_add(p, dd), rat_from(1, 2));
            auto x = find(x2, h);
            if (!x || x->terms.empty()) continue;
            try {
                NForm y = nf_mul(q, nf_inv(nf_scale(*x, Rat(2))));
                NForm cand = nf_add(*x, nf_mul(y, nf_single(Mono{h}, Rat(1))));
                if (nf_is_zero(nf_sub(nf_mul(cand, cand), a))) return cand;
            } catch (const error&) {
                // a representation of zero slipped in as the candidate root
            }
        }
        return std::nullopt;
    }
};

std::uint32_t register_integer_radical(const mpz_class& n) {
    std::string key = "i" + n.get_str();
    auto it = g_radical_by_key.find(key);
    if (it != g_radical_by_key.end()) return it->second;
    Radical r;
    r.is_integer = true;
    r.n = n;
    r.radicand = nf_rational(Rat(n));
    r.node = int_radical_node(n);
    g_radicals.push_back(std::move(r));
    auto id = static_cast<std::uint32_t>(g_radicals.size() - 1);
    g_radical_by_key.emplace(std::move(key), id);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 256) g_int_relations.add(id, n);
    return id;
}

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// sqrt of a positive rational as a normal form
NForm sqrt_rational_nf(const Rat& q) {
    std::lock_guard lk(g_tower_mu);
    mpz_class n = q.get_num() * q.get_den();
    const mpz_class& den = q.get_den();
    mpz_class outer = 1;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return nf_rational(rat_from(r, den));
    }
    for (unsigned p : kSmallPrimes) {
        mpz_class pp = mpz_class(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            outer *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return nf_rational(rat_from(outer * r, den));
    }
    Rat scale = rat_from(outer, den);

    // Relation detection keeps the tower tidy but is never needed for
    // soundness: the zero and sign tests tolerate dependent radicals.  Its
    // cost scans the whole tower, so huge machine-generated radicands skip
    // straight to registration.
    const bool worth_relating = mpz_sizeinbase(n.get_mpz_t(), 2) <= 256;

    // relations with existing integer radicals: a subset whose product
    // differs from n by a rational square gives sqrt(n) over the tower
    if (worth_relating) {
        if (auto rel = g_int_relations.solve(n))
            return nf_single(std::move(rel->first), scale * rel->second);
    }

    // a square root may still live in the field generated by non-integer
    // radicals; worth a bounded search before adjoining a new radical
    bool any_opaque = false;
    if (worth_relating)
        for (const auto& r : g_radicals)
            if (!r.is_integer) any_opaque = true;
    if (any_opaque) {
        RootSearch rs;
        rs.budget = 20000;
        if (auto root = rs.find(nf_rational(Rat(n)), static_cast<std::uint32_t>(g_radicals.size()))) {
            if (nf_sign(*root) < 0) *root = nf_neg(*root);
            return nf_mul(nf_rational(scale), *root);
        }
    }

    std::uint32_t id = register_integer_radical(n);
    return nf_single(Mono{id}, scale);
}

// sqrt of a positive normal form
NForm sqrt_nf(const NForm& a) {
    std::lock_guard lk(g_tower_mu);
    if (nf_is_plain_rational(a)) return sqrt_rational_nf(nf_plain_rational_value(a));
    CanonNF can = canonicalize(a);
    if (can.size() == 1 && can.begin()->first.empty())
        return sqrt_rational_nf(can.begin()->second);

    Rat lead = can.begin()->second;
    Rat factor = lead > 0 ? lead : Rat(-lead);
    NForm scaled = nf_scale(a, Rat(1) / factor);
    CanonNF can_scaled;
    for (const auto& [m, c] : can) can_scaled.emplace(m, c / factor);
    std::string key = "o" + canon_key(can_scaled);

    NForm core;
    if (auto it = g_radical_by_key.find(key); it != g_radical_by_key.end()) {
        core = nf_single(Mono{it->second}, Rat(1));
    } else if (auto dm = g_denest_memo.find(key); dm != g_denest_memo.end()) {
        core = dm->second;
    } else {
        // The root of a form over some radicals lives over those radicals;
        // relations through higher tower entries are caught by the key lookup
        // above, so the search field stops at the highest occurring id.
        std::uint32_t levels = 0;
        for (const auto& [m, c] : scaled.terms)
            for (std::uint32_t id : m) levels = std::max(levels, id + 1);
        RootSearch rs;
        auto root = rs.find(scaled, levels);
        if (root) {
            if (nf_sign(*root) < 0) *root = nf_neg(*root);
            g_denest_memo.emplace(key, *root);
            core = *root;
        } else {
            Radical r;
            r.is_integer = false;
            r.radicand = scaled;
            r.node = raw_sqrt(dag_of_nf(scaled));
            g_radicals.push_back(std::move(r));
            auto id = static_cast<std::uint32_t>(g_radicals.size() - 1);
            g_radical_by_key.emplace(std::move(key), id);
            core = nf_single(Mono{id}, Rat(1));
        }
    }
    return nf_mul(sqrt_rational_nf(factor), core);
}

// ---------------------------------------------------------------------------
// Normal form of a node, cached.
// ---------------------------------------------------------------------------

const NForm& normal_form(const Node* n) {
    {
        std::lock_guard lk(n->mu);
        if (n->nf) return *n->nf;
    }
    NForm f;
    switch (n->op) {
        case Op::leaf:
            f = nf_rational(n->value);
            break;
        case Op::add:
            f = nf_add(normal_form(n->a.get()), normal_form(n->b.get()));
            break;
        case Op::sub:
            f = nf_sub(normal_form(n->a.get()), normal_form(n->b.get()));
            break;
        case Op::mul:
            f = nf_mul(normal_form(n->a.get()), normal_form(n->b.get()));
            break;
        case Op::div:
            f = nf_mul(normal_form(n->a.get()), nf_inv(normal_form(n->b.get())));
            break;
        case Op::sqrt_:
            f = sqrt_nf(normal_form(n->a.get()));
            break;
    }
    std::lock_guard lk(n->mu);
    if (!n->nf) n->nf = std::make_shared<const NForm>(std::move(f));
    return *n->nf;
}

int node_sign(const Node* n) {
    if (n->op == Op::leaf) return sgn(n->value);
    {
        std::lock_guard lk(n->mu);
        if (n->cached_sign != 2) return n->cached_sign;
    }
    int result = 2;
    // cheap interval pass settles most nonzero values
    Ival iv = eval(n, static_cast<mpfr_prec_t>(initial_precision_bits()));
    if (mpfr_sgn(iv.lo.get()) > 0)
        result = 1;
    else if (mpfr_sgn(iv.hi.get()) < 0)
        result = -1;
    else
        result = nf_sign(normal_form(n));
    std::lock_guard lk(n->mu);
    n->cached_sign = result;
    return result;
}

std::shared_ptr<const Node> compact_node(const std::shared_ptr<const Node>& n) {
    if (n->op == Op::leaf) return n;
    {
        std::lock_guard lk(n->mu);
        if (n->compact) return n->compact;
    }
    auto dag = dag_of_canon(canonicalize(normal_form(n.get())));
    std::lock_guard lk(n->mu);
    if (!n->compact) n->compact = dag;
    return n->compact;
}

std::shared_ptr<const Node> make_binary(Op op, const std::shared_ptr<const Node>& a,
                                        const std::shared_ptr<const Node>& b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a;
    n->b = b;
    return n;
}

}  // namespace

CReal::CReal() : node_(make_leaf(Rat(0))) {}
CReal::CReal(long v) : node_(make_leaf(Rat(v))) {}
CReal::CReal(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    node_ = make_leaf(std::move(c));
}

CReal CReal::from_fraction(const mpz_class& num, const mpz_class& den) {
    return CReal(rat_from(num, den));
}

bool CReal::is_rational() const { return node_->op == Op::leaf; }

const Rat& CReal::rational() const {
    if (!is_rational()) throw error(errc::precondition, "value did not fold to a rational");
    return node_->value;
}

int CReal::sign() const { return node_sign(node_.get()); }

namespace {
CReal wrap(std::shared_ptr<const Node> n);
}  // namespace

class detail_access {
  public:
    static CReal make(std::shared_ptr<const Node> n) { return CReal(std::move(n)); }
};

namespace {
CReal wrap(std::shared_ptr<const Node> n) { return detail_access::make(std::move(n)); }
}  // namespace

CReal operator+(const CReal& a, const CReal& b) {
    const Node* x = a.node().get();
    const Node* y = b.node().get();
    if (x->op == Op::leaf && y->op == Op::leaf) return CReal(Rat(x->value + y->value));
    if (is_leaf_value(x, 0)) return b;
    if (is_leaf_value(y, 0)) return a;
    return wrap(make_binary(Op::add, a.node(), b.node()));
}

CReal operator-(const CReal& a, const CReal& b) {
    const Node* x = a.node().get();
    const Node* y = b.node().get();
    if (x == y) return CReal(0);
    if (x->op == Op::leaf && y->op == Op::leaf) return CReal(Rat(x->value - y->value));
    if (is_leaf_value(y, 0)) return a;
    return wrap(make_binary(Op::sub, a.node(), b.node()));
}

CReal operator*(const CReal& a, const CReal& b) {
    const Node* x = a.node().get();
    const Node* y = b.node().get();
    if (x->op == Op::leaf && y->op == Op::leaf) return CReal(Rat(x->value * y->value));
    if (is_leaf_value(x, 0) || is_leaf_value(y, 0)) return CReal(0);
    if (is_leaf_value(x, 1)) return b;
    if (is_leaf_value(y, 1)) return a;
    return wrap(make_binary(Op::mul, a.node(), b.node()));
}

CReal operator/(const CReal& a, const CReal& b) {
    const Node* y = b.node().get();
    if (y->op == Op::leaf) {
        if (y->value == 0) throw error(errc::arithmetic, "division by exact zero");
    } else if (b.sign() == 0) {
        throw error(errc::arithmetic, "division by exact zero");
    }
    const Node* x = a.node().get();
    if (x->op == Op::leaf && y->op == Op::leaf) return CReal(Rat(x->value / y->value));
    if (is_leaf_value(x, 0)) return CReal(0);
    if (is_leaf_value(y, 1)) return a;
    return wrap(make_binary(Op::div, a.node(), b.node()));
}

CReal CReal::operator-() const { return CReal(0) - *this; }

CReal sqrt(const CReal& a) {
    int s = a.sign();
    if (s < 0) throw error(errc::domain, "square root of a negative value");
    if (s == 0) return CReal(0);
    const Node* x = a.node().get();
    if (x->op == Op::leaf) {
        const Rat& q = x->value;
        if (mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(q.get_den().get_mpz_t())) {
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
            return CReal(rat_from(rn, rd));
        }
    }
    auto n = std::make_shared<Node>();
    n->op = Op::sqrt_;
    n->a = a.node();
    return wrap(std::move(n));
}

namespace {

// Printing expands shared subterms, so the written size is the TREE size of
// the graph, which can be exponential in its depth.  Counts tree nodes up to
// the budget and reports whether the whole tree fits.
bool print_fits(const Node* n, int* budget) {
    if (--*budget < 0) return false;
    if (n->op == Op::leaf) return true;
    if (!print_fits(n->a.get(), budget)) return false;
    return !n->b || print_fits(n->b.get(), budget);
}

}  // namespace

std::string CReal::to_expr() const {
    struct Walk {
        static std::string go(const Node* n) {
            switch (n->op) {
                case Op::leaf:
                    return n->value.get_str();
                case Op::add:
                    return "(" + go(n->a.get()) + " + " + go(n->b.get()) + ")";
                case Op::sub:
                    return "(" + go(n->a.get()) + " - " + go(n->b.get()) + ")";
                case Op::mul:
                    return "(" + go(n->a.get()) + " * " + go(n->b.get()) + ")";
                case Op::div:
                    return "(" + go(n->a.get()) + " / " + go(n->b.get()) + ")";
                case Op::sqrt_:
                    return "sqrt(" + go(n->a.get()) + ")";
            }
            return {};
        }
    };
    // Values built from long construction chains print from their canonical
    // form instead of their history; short expressions keep their shape.
    int budget = 256;
    if (print_fits(node_.get(), &budget)) return Walk::go(node_.get());
    return Walk::go(compact_node(node_).get());
}

namespace {

struct Parser {
    std::string_view s;
    size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw error(errc::construction, "expression parse error at offset " +
                                            std::to_string(i) + ": " + msg);
    }

    CReal expr() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '(') {
            ++i;
            CReal lhs = expr();
            ws();
            if (i >= s.size()) fail("missing operator");
            char op = s[i];
            if (op != '+' && op != '-' && op != '*' && op != '/') fail("bad operator");
            ++i;
            CReal rhs = expr();
            ws();
            if (!eat(')')) fail("missing ')'");
            switch (op) {
                case '+': return lhs + rhs;
                case '-': return lhs - rhs;
                case '*': return lhs * rhs;
                default: return lhs / rhs;
            }
        }
        if (s.compare(i, 5, "sqrt(") == 0) {
            i += 5;
            CReal inner = expr();
            ws();
            if (!eat(')')) fail("missing ')' after sqrt");
            return sqrt(inner);
        }
        return number();
    }

    CReal number() {
        ws();
        size_t start = i;
        if (eat('-')) {
        }
        size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0) fail("expected a number");
        mpz_class num(std::string(s.substr(start, i - start)), 10);
        mpz_class den(1);
        if (eat('/')) {
            size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == dstart) fail("expected a denominator");
            den = mpz_class(std::string(s.substr(dstart, i - dstart)), 10);
        }
        return CReal::from_fraction(num, den);
    }
};

}  // namespace

CReal CReal::parse(std::string_view text) {
    Parser p{text};
    CReal v = p.expr();
    p.ws();
    if (p.i != text.size())
        throw error(errc::construction, "trailing characters in expression");
    return v;
}

namespace {

// Midpoint of an enclosure tight enough for the requested digit count.
Big midpoint_for_digits(const Node* n, int digits) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(initial_precision_bits(), digits * 4 + 32);
    for (;;) {
        Ival iv = eval(n, p);
        if (mpfr_sgn(iv.lo.get()) > 0 || mpfr_sgn(iv.hi.get()) < 0) {
            Big w(p), alo(p), ahi(p), bound(p);
            mpfr_sub(w.get(), iv.hi.get(), iv.lo.get(), MPFR_RNDU);
            mpfr_abs(alo.get(), iv.lo.get(), MPFR_RNDD);
            mpfr_abs(ahi.get(), iv.hi.get(), MPFR_RNDD);
            mpfr_min(bound.get(), alo.get(), ahi.get(), MPFR_RNDD);
            // relative width below 10^-(digits+2)
            Big scaled(p);
            mpfr_mul_ui(scaled.get(), w.get(), 10, MPFR_RNDU);
            for (int k = 0; k < digits + 1; ++k)
                mpfr_mul_ui(scaled.get(), scaled.get(), 10, MPFR_RNDU);
            if (mpfr_cmp(scaled.get(), bound.get()) < 0) {
                Big mid(p);
                mpfr_add(mid.get(), iv.lo.get(), iv.hi.get(), MPFR_RNDN);
                mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
                return mid;
            }
        }
        p *= 2;
    }
}

}  // namespace

std::string CReal::approx(int digits) const {
    if (digits < 1) digits = 1;
    if (sign() == 0) return "0";
    auto small = compact_node(node_);
    Big mid = midpoint_for_digits(small.get(), digits);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, mid.get());
    return std::string(buf.data());
}

std::string CReal::approx_fixed(int frac_digits) const {
    if (frac_digits < 1) frac_digits = 1;
    if (sign() == 0) {
        std::string z = "0.";
        z.append(static_cast<size_t>(frac_digits), '0');
        return z;
    }
    auto small = compact_node(node_);
    Big mid = midpoint_for_digits(small.get(), frac_digits + 4);
    std::vector<char> buf(static_cast<size_t>(frac_digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", frac_digits, mid.get());
    return std::string(buf.data());
}

std::pair<double, double> CReal::enclosure_hint() const {
    Ival iv = eval(node_.get(), static_cast<mpfr_prec_t>(initial_precision_bits()));
    return {mpfr_get_d(iv.lo.get(), MPFR_RNDD), mpfr_get_d(iv.hi.get(), MPFR_RNDU)};
}

}  // namespace klein
