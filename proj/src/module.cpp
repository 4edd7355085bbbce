#include "factorlab/module.hpp"

#include <algorithm>
#include <map>

namespace factorlab {

ModulePtr Module::regular(const RingPtr& ring) {
    const int n = ring->size();
    std::vector<Elem> add(n * n), act(n * n);
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = ring->element_name(a);
        for (int b = 0; b < n; ++b) {
            add[a * n + b] = ring->add(a, b);
            act[a * n + b] = ring->mul(a, b);
        }
    }
    return from_table(ring, std::move(add), std::move(act), ring->zero(),
                      {{"kind", "regular"}}, std::move(names), n);
}

ModulePtr Module::zmod_over(int m, const RingPtr& ring) {
    const auto& c = ring->construction();
    if (!(c.contains("kind") && c["kind"] == "zmod"))
        throw Error("invalid_module", "zmod_over requires a zmod ring");
    const int n = c["n"].get<int>();
    if (m < 2 || n % m != 0)
        throw Error("invalid_module", "zmod_over requires 2 <= m and m | n");
    std::vector<Elem> add(m * m), act(n * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) add[a * m + b] = (a + b) % m;
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < m; ++a) act[r * m + a] = (r * a) % m;
    std::vector<std::string> names(m);
    for (int a = 0; a < m; ++a) names[a] = std::to_string(a);
    return from_table(ring, std::move(add), std::move(act), 0,
                      {{"kind", "zmod_over"}, {"m", m}, {"n", n}},
                      std::move(names), m);
}

ModulePtr Module::quotient(const ModulePtr& mod,
                           const std::vector<Elem>& submodule) {
    if (!mod->is_submodule(submodule))
        throw Error("not_submodule", "quotient requires a submodule");
    const int k = mod->size();
    std::vector<char> in_sub(k, 0);
    for (Elem s : submodule) in_sub[s] = 1;

    // Cosets: canonical representative = least member.
    std::vector<int> coset_of(k, -1);
    std::vector<Elem> reps;
    for (Elem m = 0; m < k; ++m) {
        if (coset_of[m] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(m);
        for (Elem s = 0; s < k; ++s)
            if (in_sub[s]) coset_of[mod->add(m, s)] = id;
    }
    const int q = static_cast<int>(reps.size());
    if (q < 2)
        throw Error("invalid_module", "quotient module collapses to zero");
    const int n = mod->ring()->size();
    std::vector<Elem> add(q * q), act(n * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            add[a * q + b] = coset_of[mod->add(reps[a], reps[b])];
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < q; ++a)
            act[r * q + a] = coset_of[mod->act(r, reps[a])];
    std::vector<std::string> names(q);
    for (int a = 0; a < q; ++a)
        names[a] = mod->element_name(reps[a]) + "~";
    std::vector<int> sub_sorted(submodule.begin(), submodule.end());
    std::sort(sub_sorted.begin(), sub_sorted.end());
    nlohmann::json cons = {{"kind", "quotient"},
                           {"of", mod->to_json()},
                           {"by", sub_sorted}};
    return from_table(mod->ring(), std::move(add), std::move(act),
                      coset_of[mod->zero()], std::move(cons), std::move(names),
                      q);
}

ModulePtr Module::product(const ModulePtr& a, const ModulePtr& b, int limit) {
    if (a->ring() != b->ring())
        throw Error("invalid_module", "product factors must share the ring");
    const int ka = a->size(), kb = b->size(), k = ka * kb;
    if (k > limit) throw Error("bound_exceeded", "product carrier exceeds limit");
    const int n = a->ring()->size();
    auto idx = [kb](Elem x, Elem y) { return x * kb + y; };
    std::vector<Elem> add(k * k), act(n * k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            add[x * k + y] = idx(a->add(x / kb, y / kb), b->add(x % kb, y % kb));
    for (int r = 0; r < n; ++r)
        for (int x = 0; x < k; ++x)
            act[r * k + x] = idx(a->act(r, x / kb), b->act(r, x % kb));
    std::vector<std::string> names(k);
    for (int x = 0; x < k; ++x)
        names[x] = "(" + a->element_name(x / kb) + "," +
                   b->element_name(x % kb) + ")";
    return from_table(a->ring(), std::move(add), std::move(act),
                      idx(a->zero(), b->zero()),
                      {{"kind", "product"},
                       {"factors", {a->to_json(), b->to_json()}}},
                      std::move(names), limit);
}

ModulePtr Module::from_table(RingPtr ring, std::vector<Elem> add,
                             std::vector<Elem> act, Elem zero,
                             nlohmann::json construction,
                             std::vector<std::string> names, int limit) {
    const int n = ring->size();
    size_t kk = add.size();
    int k = 0;
    while (static_cast<size_t>(k) * k < kk) ++k;
    if (static_cast<size_t>(k) * k != kk || act.size() != static_cast<size_t>(n) * k)
        throw Error("invalid_module", "table sizes inconsistent");
    if (k < 2) throw Error("invalid_module", "modules must be nonzero");
    if (k > limit) throw Error("bound_exceeded", "carrier exceeds limit");
    auto mod = std::shared_ptr<Module>(new Module());
    mod->ring_ = std::move(ring);
    mod->k_ = k;
    mod->zero_ = zero;
    mod->add_ = std::move(add);
    mod->act_ = std::move(act);
    if (names.empty()) {
        names.resize(k);
        for (int i = 0; i < k; ++i) names[i] = "m" + std::to_string(i);
    }
    mod->names_ = std::move(names);
    mod->construction_ = std::move(construction);
    mod->finish(limit);
    return mod;
}

ModulePtr Module::from_json(const nlohmann::json& j, const RingPtr& ring) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "regular") return regular(ring);
    if (kind == "zmod_over") return zmod_over(j.at("m").get<int>(), ring);
    if (kind == "quotient") {
        ModulePtr base = j.contains("of") ? from_json(j["of"], ring)
                                          : regular(ring);
        return quotient(base, j.at("by").get<std::vector<Elem>>());
    }
    if (kind == "product") {
        const auto& factors = j.at("factors");
        if (factors.size() < 2)
            throw Error("invalid_module", "product needs >= 2 factors");
        ModulePtr acc = from_json(factors[0], ring);
        for (size_t i = 1; i < factors.size(); ++i)
            acc = product(acc, from_json(factors[i], ring));
        return acc;
    }
    throw Error("invalid_module", "unknown module kind: " + kind);
}

void Module::finish(int) {
    auto fail = [&](const std::string& what) {
        throw Error("invalid_module", what);
    };
    const int k = k_, n = ring_->size();
    for (Elem v : add_)
        if (v < 0 || v >= k) fail("add table out of range");
    for (Elem v : act_)
        if (v < 0 || v >= k) fail("act table out of range");
    for (int a = 0; a < k; ++a) {
        if (add(a, zero_) != a) fail("zero is not additive identity");
        bool has_neg = false;
        for (int b = 0; b < k; ++b)
            if (add(a, b) == zero_) has_neg = true;
        if (!has_neg) fail("missing additive inverse");
        if (act(ring_->one(), a) != a) fail("module not unitary");
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (add(a, b) != add(b, a)) fail("addition not commutative");
            for (int c = 0; c < k; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    fail("addition not associative");
        }
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int a = 0; a < k; ++a)
                if (act(r, act(s, a)) != act(ring_->mul(r, s), a))
                    fail("action not multiplicative");
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b)
                if (act(r, add(a, b)) != add(act(r, a), act(r, b)))
                    fail("action not additive in the module");
            for (int s = 0; s < n; ++s)
                if (act(ring_->add(r, s), a) != add(act(r, a), act(s, a)))
                    fail("action not additive in the ring");
        }
}

std::vector<Elem> Module::ann_of_subset(const std::vector<Elem>& N) const {
    if (N.empty()) throw Error("invalid_argument", "Ann of empty subset");
    std::vector<Elem> out;
    for (int r = 0; r < ring_->size(); ++r) {
        bool kills_all = true;
        for (Elem m : N)
            if (act(r, m) != zero_) {
                kills_all = false;
                break;
            }
        if (kills_all) out.push_back(r);
    }
    return out;
}

std::vector<Elem> Module::ann_of_scalar(Elem r) const {
    std::vector<Elem> out;
    for (int m = 0; m < k_; ++m)
        if (act(r, m) == zero_) out.push_back(m);
    return out;
}

std::vector<Elem> Module::zero_divisors(const std::vector<Elem>& N) const {
    if (N.empty()) throw Error("invalid_argument", "Z of empty subset");
    std::vector<Elem> out;
    for (int r = 0; r < ring_->size(); ++r) {
        for (Elem m : N)
            if (m != zero_ && act(r, m) == zero_) {
                out.push_back(r);
                break;
            }
    }
    return out;
}

std::vector<Elem> Module::carrier() const {
    std::vector<Elem> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = i;
    return out;
}

bool Module::is_submodule(const std::vector<Elem>& subset) const {
    std::vector<char> in(k_, 0);
    for (Elem s : subset) {
        if (s < 0 || s >= k_) return false;
        in[s] = 1;
    }
    if (!in[zero_]) return false;
    for (Elem a : subset)
        for (Elem b : subset)
            if (!in[add(a, b)]) return false;
    for (int r = 0; r < ring_->size(); ++r)
        for (Elem a : subset)
            if (!in[act(r, a)]) return false;
    return true;
}

}  // namespace factorlab
