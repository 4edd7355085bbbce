#include "factorlab/ring.hpp"

#include <algorithm>
#include <numeric>

namespace factorlab {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string gf_elem_name(const std::vector<int>& digits) {
    std::string s;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        int c = digits[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace

RingPtr Ring::zmod(int n, int limit) {
    if (n < 2) throw Error("invalid_ring", "zmod requires n >= 2");
    if (n > limit)
        throw Error("bound_exceeded",
                    "carrier size " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n;
    r->zero_ = 0;
    r->one_ = 1 % n;
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r->add_[a * n + b] = (a + b) % n;
            r->mul_[a * n + b] = (a * b) % n;
        }
    r->names_.resize(n);
    for (int a = 0; a < n; ++a) r->names_[a] = std::to_string(a);
    r->construction_ = {{"kind", "zmod"}, {"n", n}};
    r->finish(limit);
    return r;
}

RingPtr Ring::product(const RingPtr& a, const RingPtr& b, int limit) {
    const int na = a->size(), nb = b->size();
    const int n = na * nb;
    if (n > limit)
        throw Error("bound_exceeded", "product carrier exceeds limit");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n;
    auto idx = [nb](Elem x, Elem y) { return x * nb + y; };
    r->zero_ = idx(a->zero(), b->zero());
    r->one_ = idx(a->one(), b->one());
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Elem xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            r->add_[x * n + y] = idx(a->add(xa, ya), b->add(xb, yb));
            r->mul_[x * n + y] = idx(a->mul(xa, ya), b->mul(xb, yb));
        }
    r->names_.resize(n);
    for (int x = 0; x < n; ++x)
        r->names_[x] = "(" + a->element_name(x / nb) + "," +
                       b->element_name(x % nb) + ")";
    r->construction_ = {{"kind", "product"},
                        {"factors", {a->to_json(), b->to_json()}}};
    r->finish(limit);
    return r;
}

RingPtr Ring::gf_quotient(int p, const std::vector<int>& f, int limit) {
    if (!is_prime(p)) throw Error("invalid_ring", "gf_quotient needs prime p");
    if (f.size() < 2) throw Error("invalid_ring", "modulus must have degree >= 1");
    for (int c : f)
        if (c < 0 || c >= p)
            throw Error("invalid_ring", "modulus coefficients must be in [0,p)");
    if (f.back() != 1) throw Error("invalid_ring", "modulus must be monic");
    const int k = static_cast<int>(f.size()) - 1;
    long long size = 1;
    for (int i = 0; i < k; ++i) {
        size *= p;
        if (size > limit) throw Error("bound_exceeded", "p^k exceeds limit");
    }
    const int n = static_cast<int>(size);

    auto decode = [&](int id) {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = id % p;
            id /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int id = 0;
        for (int i = k - 1; i >= 0; --i) id = id * p + d[i];
        return id;
    };
    // Reduce a degree <= 2k-2 coefficient vector mod f.
    auto reduce = [&](std::vector<int> c) {
        for (int i = static_cast<int>(c.size()) - 1; i >= k; --i) {
            int lead = c[i];
            if (lead == 0) continue;
            for (int j = 0; j <= k; ++j) {
                int& t = c[i - k + j];
                t = ((t - lead * f[j]) % p + p) % p;
            }
        }
        c.resize(k);
        return c;
    };

    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n;
    r->zero_ = 0;
    r->one_ = 1;
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    for (int x = 0; x < n; ++x) {
        auto dx = decode(x);
        for (int y = 0; y < n; ++y) {
            auto dy = decode(y);
            std::vector<int> s(k), m(2 * k - 1, 0);
            for (int i = 0; i < k; ++i) s[i] = (dx[i] + dy[i]) % p;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    m[i + j] = (m[i + j] + dx[i] * dy[j]) % p;
            r->add_[x * n + y] = encode(s);
            r->mul_[x * n + y] = encode(reduce(std::move(m)));
        }
    }
    r->names_.resize(n);
    for (int x = 0; x < n; ++x) r->names_[x] = gf_elem_name(decode(x));
    r->construction_ = {{"kind", "gfquot"}, {"p", p}, {"f", f}};
    r->finish(limit);
    return r;
}

RingPtr Ring::from_table(std::vector<Elem> add, std::vector<Elem> mul,
                         Elem zero, Elem one, nlohmann::json construction,
                         std::vector<std::string> names, int limit) {
    const auto n2 = add.size();
    int n = 0;
    while (static_cast<size_t>(n) * n < n2) ++n;
    if (static_cast<size_t>(n) * n != n2 || mul.size() != n2 || n == 0)
        throw Error("invalid_ring", "tables must be square and equally sized");
    if (n > limit) throw Error("bound_exceeded", "carrier exceeds limit");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->n_ = n;
    r->zero_ = zero;
    r->one_ = one;
    r->add_ = std::move(add);
    r->mul_ = std::move(mul);
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
    }
    r->names_ = std::move(names);
    r->construction_ = std::move(construction);
    r->finish(limit);
    return r;
}

RingPtr Ring::from_json(const nlohmann::json& j, int limit) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "zmod") return zmod(j.at("n").get<int>(), limit);
    if (kind == "gfquot")
        return gf_quotient(j.at("p").get<int>(),
                           j.at("f").get<std::vector<int>>(), limit);
    if (kind == "product") {
        const auto& factors = j.at("factors");
        if (factors.size() < 2)
            throw Error("invalid_ring", "product needs >= 2 factors");
        RingPtr acc = from_json(factors[0], limit);
        for (size_t i = 1; i < factors.size(); ++i)
            acc = product(acc, from_json(factors[i], limit), limit);
        return acc;
    }
    throw Error("invalid_ring", "unknown ring kind: " + kind);
}

void Ring::finish(int limit) {
    if (n_ > limit) throw Error("bound_exceeded", "carrier exceeds limit");
    validate();

    neg_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (add(a, b) == zero_) neg_[a] = b;

    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == one_) inv_[a] = b;
    for (int a = 0; a < n_; ++a)
        if (inv_[a] >= 0) units_.push_back(a);

    div_wit_.assign(n_ * n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int c = 0; c < n_; ++c) {
            Elem b = mul(a, c);
            if (div_wit_[a * n_ + b] < 0) div_wit_[a * n_ + b] = c;
        }

    assoc_rep_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b <= a; ++b)
            if (associated(a, b)) {
                assoc_rep_[a] = b;
                break;
            }
    }
}

void Ring::validate() const {
    auto fail = [&](const std::string& what) {
        throw Error("invalid_ring", what);
    };
    const int n = n_;
    if (zero_ < 0 || zero_ >= n || one_ < 0 || one_ >= n) fail("identity out of range");
    if (zero_ == one_) fail("one must differ from zero");
    for (int i = 0; i < n * n; ++i) {
        if (add_[i] < 0 || add_[i] >= n) fail("add table out of range");
        if (mul_[i] < 0 || mul_[i] >= n) fail("mul table out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (add(a, zero_) != a) fail("zero is not additive identity");
        if (mul(a, one_) != a) fail("one is not multiplicative identity");
        bool has_neg = false;
        for (int b = 0; b < n; ++b)
            if (add(a, b) == zero_) has_neg = true;
        if (!has_neg) fail("missing additive inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) fail("addition not commutative");
            if (mul(a, b) != mul(b, a)) fail("multiplication not commutative");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    fail("addition not associative");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    fail("multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    fail("multiplication not distributive");
            }
}

bool Ring::is_domain() const {
    for (int a = 0; a < n_; ++a) {
        if (a == zero_) continue;
        for (int b = 0; b < n_; ++b) {
            if (b == zero_) continue;
            if (mul(a, b) == zero_) return false;
        }
    }
    return true;
}

}  // namespace factorlab
