#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "fields.hpp"
#include "forms.hpp"

namespace binforms {

/// Deterministic random stream: a single seed split per suite name, so that
/// identical configs reproduce identical draws. Bounded draws use plain
/// modulo reduction (mt19937_64 output is specified bit-for-bit by the
/// standard, unlike the distribution adaptors).
class SuiteRng {
  public:
    SuiteRng(std::uint64_t seed, std::string_view suite) : eng_(seed ^ fnv1a(suite)) {}

    std::uint64_t next() { return eng_(); }
    std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(n)); }

    long long rejected() const { return rejected_; }
    void count_rejection() { ++rejected_; }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 1469598103934665603ull;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    std::mt19937_64 eng_;
    long long rejected_ = 0;
};

inline Rat random_scalar(SuiteRng& rng, const FieldCtx<Rat>&) {
    return Rat(rng.below(19) - 9, 1 + rng.below(4));
}
inline Fp random_scalar(SuiteRng& rng, const FieldCtx<Fp>& ctx) {
    return Fp(rng.below(ctx.p), ctx.p);
}
inline Fp2 random_scalar(SuiteRng& rng, const FieldCtx<Fp2>& ctx) {
    return Fp2(rng.below(ctx.p), rng.below(ctx.p), ctx.p);
}

template <class K>
BinaryForm<K> random_form(SuiteRng& rng, const FieldCtx<K>& ctx, int degree) {
    BinaryForm<K> f(degree);
    for (int j = 0; j <= degree; ++j) f.coeff(j) = random_scalar(rng, ctx);
    return f;
}

template <class K>
BinaryForm<K> random_nonzero_form(SuiteRng& rng, const FieldCtx<K>& ctx, int degree) {
    for (;;) {
        BinaryForm<K> f = random_form(rng, ctx, degree);
        if (!f.is_zero()) return f;
        rng.count_rejection();
    }
}

template <class K>
bool tuple_coprime(const std::vector<BinaryForm<K>>& fs) {
    BinaryForm<K> g = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) g = form_gcd(g, fs[i]);
    return g.degree() == 0;
}

/// Draw nonzero forms of the given degrees until the gcd of the whole tuple
/// is constant; rejected draws are counted on the stream.
template <class K>
std::vector<BinaryForm<K>> random_coprime_tuple(SuiteRng& rng, const FieldCtx<K>& ctx,
                                                const std::vector<int>& degrees) {
    for (;;) {
        std::vector<BinaryForm<K>> fs;
        for (int d : degrees) fs.push_back(random_nonzero_form(rng, ctx, d));
        if (tuple_coprime(fs)) return fs;
        rng.count_rejection();
    }
}

}  // namespace binforms
