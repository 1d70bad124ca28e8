#include "klein/oval.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

namespace klein {

namespace {

bool odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(long p) : p_(p) {
    if (!odd_prime(p)) throw error(errc::domain, "modulus must be an odd prime");
}

long PrimeField::inv(long a) const {
    a = norm(a);
    if (a == 0) throw error(errc::arithmetic, "inverse of zero in prime field");
    long t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return norm(t);
}

namespace {

using Triple = std::array<long, 3>;

Triple cross(const PrimeField& f, const Triple& u, const Triple& v) {
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
            f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

long dot(const PrimeField& f, const Triple& u, const Triple& v) {
    return f.norm(f.mul(u[0], v[0]) + f.mul(u[1], v[1]) + f.mul(u[2], v[2]));
}

bool on_conic(const PrimeField& f, const Triple& pt) {
    return f.mul(pt[0], pt[2]) == f.mul(pt[1], pt[1]);
}

// conic points in canonical order: (1, t, t^2) for t = 0..p-1, then (0,0,1)
std::vector<Triple> conic_points(const PrimeField& f) {
    std::vector<Triple> pts;
    for (long t = 0; t < f.p(); ++t) pts.push_back({1, t, f.mul(t, t)});
    pts.push_back({0, 0, 1});
    return pts;
}

std::vector<Triple> off_conic_points(const PrimeField& f) {
    std::vector<Triple> pts;
    for (long y = 0; y < f.p(); ++y)
        for (long z = 0; z < f.p(); ++z)
            if (z != f.mul(y, y)) pts.push_back({1, y, z});
    for (long z = 0; z < f.p(); ++z) pts.push_back({0, 1, z});
    return pts;
}

Perm induced_involution(const PrimeField& f, const std::vector<Triple>& conic,
                        const Triple& p) {
    int n = static_cast<int>(conic.size());
    Perm s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Triple line = cross(f, p, conic[i]);
        int other = -1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (dot(f, line, conic[j]) == 0) {
                if (other != -1)
                    throw error(errc::construction, "three conic points on one line");
                other = j;
            }
        }
        s[static_cast<size_t>(i)] = other == -1 ? i : other;
    }
    return s;
}

bool is_permutation(const Perm& s, int n) {
    if (static_cast<int>(s.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : s) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool is_involution(const Perm& s) {
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[static_cast<size_t>(s[static_cast<size_t>(i)])] != i) return false;
    return true;
}

// members[a][b] = indices of involutions mapping a to b
std::vector<std::vector<std::vector<int>>> pair_map(const AbstractOval& b) {
    auto n = static_cast<size_t>(b.n);
    std::vector<std::vector<std::vector<int>>> m(n, std::vector<std::vector<int>>(n));
    for (size_t k = 0; k < b.s.size(); ++k)
        for (size_t a = 0; a < n; ++a)
            m[a][static_cast<size_t>(b.s[k][a])].push_back(static_cast<int>(k));
    return m;
}

void require_valid(const AbstractOval& b, const char* who) {
    if (!verify_abstract_oval(b))
        throw error(errc::precondition, std::string(who) + " requires a valid abstract oval");
}

Perm compose3(const Perm& i, const Perm& j, const Perm& k) {
    Perm out(i.size());
    for (size_t x = 0; x < i.size(); ++x)
        out[x] = k[static_cast<size_t>(j[static_cast<size_t>(i[x])])];
    return out;
}

bool commute(const Perm& f, const Perm& g) {
    for (size_t x = 0; x < f.size(); ++x)
        if (f[static_cast<size_t>(g[x])] != g[static_cast<size_t>(f[x])]) return false;
    return true;
}

}  // namespace

AbstractOval conic_oval(long p) {
    PrimeField f(p);
    std::vector<Triple> conic = conic_points(f);
    AbstractOval b;
    b.n = static_cast<int>(conic.size());
    std::set<Perm> distinct;
    for (const Triple& pt : off_conic_points(f)) {
        Perm s = induced_involution(f, conic, pt);
        bool identity = true;
        for (int i = 0; i < b.n; ++i)
            if (s[static_cast<size_t>(i)] != i) identity = false;
        if (identity)
            throw error(errc::construction, "off-conic point induced the identity");
        if (!distinct.insert(s).second)
            throw error(errc::construction, "two off-conic points induced one involution");
        b.s.push_back(std::move(s));
    }
    return b;
}

bool verify_abstract_oval(const AbstractOval& b) {
    if (b.n < 3) return false;
    for (const Perm& s : b.s)
        if (!is_permutation(s, b.n) || !is_involution(s)) return false;
    auto members = pair_map(b);
    int n = b.n;
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < n; ++a2)
            for (int b1 = 0; b1 < n; ++b1) {
                if (b1 == a1 || b1 == a2) continue;
                for (int b2 = 0; b2 < n; ++b2) {
                    if (b2 == a1 || b2 == a2) continue;
                    int count = 0;
                    for (int k : members[static_cast<size_t>(a1)][static_cast<size_t>(a2)])
                        if (b.s[static_cast<size_t>(k)][static_cast<size_t>(b1)] == b2) ++count;
                    if (count != 1) return false;
                }
            }
    return true;
}

bool secants_pascalian(const AbstractOval& b) {
    require_valid(b, "secants_pascalian");
    std::map<Perm, int> index;
    for (size_t k = 0; k < b.s.size(); ++k) index.emplace(b.s[k], static_cast<int>(k));
    auto members = pair_map(b);
    for (int a = 0; a < b.n; ++a)
        for (int c = a + 1; c < b.n; ++c) {
            const auto& on_line = members[static_cast<size_t>(a)][static_cast<size_t>(c)];
            for (int i : on_line)
                for (int j : on_line)
                    for (int k : on_line) {
                        Perm prod = compose3(b.s[static_cast<size_t>(i)],
                                             b.s[static_cast<size_t>(j)],
                                             b.s[static_cast<size_t>(k)]);
                        if (prod[static_cast<size_t>(a)] != c) return false;
                        if (index.find(prod) == index.end()) return false;
                    }
        }
    return true;
}

bool is_regular(const AbstractOval& b) {
    require_valid(b, "is_regular");
    std::set<Perm> index(b.s.begin(), b.s.end());
    for (const Perm& t : b.s)
        for (const Perm& s : b.s)
            if (index.find(compose3(t, s, t)) == index.end()) return false;
    return true;
}

OvalIncidence build_incidence(const AbstractOval& b) {
    require_valid(b, "build_incidence");
    auto members = pair_map(b);
    OvalIncidence inc;
    inc.point_count = b.n + static_cast<int>(b.s.size());
    for (int a = 0; a < b.n; ++a)
        for (int c = a; c < b.n; ++c) {
            OvalLine line;
            line.a = a;
            line.b = c;
            line.members = members[static_cast<size_t>(a)][static_cast<size_t>(c)];
            (a == c ? inc.tangents : inc.secants).push_back(std::move(line));
        }
    return inc;
}

InvolutionModelReport involution_model(long p) {
    PrimeField f(p);
    std::vector<Triple> conic = conic_points(f);
    int n = static_cast<int>(conic.size());

    struct OffPoint {
        Triple pt;
        Perm s;
        int fixed;
        bool internal;
    };
    std::vector<OffPoint> off;
    for (const Triple& pt : off_conic_points(f)) {
        Perm s = induced_involution(f, conic, pt);
        int fixed = 0;
        for (int i = 0; i < n; ++i)
            if (s[static_cast<size_t>(i)] == i) ++fixed;
        // geometric classification: the polar of pt meets the conic twice
        // exactly when pt is external
        Triple polar = {pt[2], f.neg(f.mul(2, pt[1])), pt[0]};
        int polar_hits = 0;
        for (const Triple& c : conic)
            if (dot(f, polar, c) == 0) ++polar_hits;
        off.push_back({pt, std::move(s), fixed, polar_hits == 0});
    }

    InvolutionModelReport rep;
    rep.p = p;
    bool classes_ok = true;
    for (const OffPoint& o : off) {
        if (o.fixed == 0) ++rep.fixed_point_free;
        else if (o.fixed == 2) ++rep.two_fixed;
        else classes_ok = false;
        if (o.internal) ++rep.internal_points;
        else ++rep.external_points;
        // internal points induce fixed-point-free involutions, external
        // points induce involutions with two fixed conic points
        if (o.internal != (o.fixed == 0)) classes_ok = false;
    }

    // secants with their poles
    struct Secant {
        int a, b;
        const Perm* pole_s;
    };
    std::vector<Secant> secants;
    bool poles_ok = true;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            Triple line = cross(f, conic[static_cast<size_t>(a)], conic[static_cast<size_t>(c)]);
            Triple pole = {f.mul(2, line[2]), f.neg(line[1]), f.mul(2, line[0])};
            const OffPoint* at = nullptr;
            for (const OffPoint& o : off) {
                Triple x = cross(f, o.pt, pole);
                if (x[0] == 0 && x[1] == 0 && x[2] == 0) at = &o;
            }
            if (at == nullptr || at->internal ||
                at->s[static_cast<size_t>(a)] != a || at->s[static_cast<size_t>(c)] != c) {
                poles_ok = false;
                continue;
            }
            secants.push_back({a, c, &at->s});
        }
    rep.secant_lines = static_cast<long>(secants.size());

    rep.counts_ok = classes_ok && poles_ok &&
                    rep.fixed_point_free == p * (p - 1) / 2 &&
                    rep.two_fixed == p * (p + 1) / 2 &&
                    rep.internal_points == rep.fixed_point_free &&
                    rep.external_points == rep.two_fixed &&
                    rep.secant_lines == rep.two_fixed;

    // incidence between internal points and secants is exactly commuting of
    // the matched involutions
    rep.incidence_ok = poles_ok;
    for (const OffPoint& o : off) {
        if (!o.internal) continue;
        for (const Secant& sec : secants) {
            Triple line = cross(f, conic[static_cast<size_t>(sec.a)],
                                conic[static_cast<size_t>(sec.b)]);
            bool incident = dot(f, line, o.pt) == 0;
            if (incident != commute(o.s, *sec.pole_s)) rep.incidence_ok = false;
        }
    }
    return rep;
}

std::string oval_json(const AbstractOval& b) {
    nlohmann::json j;
    j["n"] = b.n;
    j["involutions"] = b.s;
    return j.dump();
}

std::string incidence_json(const OvalIncidence& inc) {
    nlohmann::json j;
    j["points"] = inc.point_count;
    auto lines = [](const std::vector<OvalLine>& ls) {
        nlohmann::json arr = nlohmann::json::array();
        for (const OvalLine& l : ls)
            arr.push_back({{"a", l.a}, {"b", l.b}, {"members", l.members}});
        return arr;
    };
    j["secants"] = lines(inc.secants);
    j["tangents"] = lines(inc.tangents);
    return j.dump();
}

}  // namespace klein
