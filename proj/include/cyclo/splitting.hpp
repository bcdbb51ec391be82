#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/ideal.hpp"

namespace cyclo {

/// Splitting data of a rational prime: n = r * p^t with p not dividing r,
/// ramification index e = phi(n)/phi(r), residue degree l = ord of p mod r,
/// and m = phi(r)/l primes above p, each of norm p^l.  e*l*m = phi(n).
struct RationalPrimeSplit {
    long p = 0;
    long r = 0;
    int t = 0;
    int e = 1;
    int l = 1;
    int m = 1;

    bool inert() const { return t == 0 && m == 1; }
    bool ramified() const { return e > 1; }
    Int basic_index() const;  // p^l
};

bool is_prime(long p);

RationalPrimeSplit split_prime(const FieldPtr& f, long p);

/// Terms (p^(l*j), binom(j+m-1, m-1)) of the Euler factor, for p^(l*j) <= limit.
std::vector<std::pair<Int, Int>> euler_factor_coeffs(const RationalPrimeSplit& s,
                                                     const Int& limit);

/// Same, restricted to j a multiple of m: the factor that generates exactly
/// the indices admitting a perfect colouring.
std::vector<std::pair<Int, Int>> perfect_euler_factor_coeffs(const RationalPrimeSplit& s,
                                                             const Int& limit);

/// File-backed store of found split-prime generators, keyed by (n, p).
/// Values are coefficient vectors.  Writes are atomic whole-file replacements;
/// a missing or stale file is rebuilt silently.
class GeneratorCache {
  public:
    GeneratorCache() = default;
    explicit GeneratorCache(std::string path);

    /// Resolution order: explicit path > CYCLOCOLOUR_CACHE > bundled default.
    static std::string default_path();

    const std::string& path() const { return path_; }

    std::optional<std::vector<std::vector<Int>>> lookup(int n, long p) const;
    void store(int n, long p, const std::vector<std::vector<Int>>& gens);

    void load();
    void save() const;

  private:
    std::string path_;
    std::map<std::pair<int, long>, std::vector<std::vector<Int>>> entries_;
    bool dirty_ = false;
};

struct SearchBudget {
    int max_coeff = 4;
    int max_support = 0;  // 0: up to phi(n)
};

struct GeneratorSearchError : std::runtime_error {
    GeneratorSearchError(int n, long p, int l, const SearchBudget& b)
        : std::runtime_error("generator not found within bound (n=" + std::to_string(n) +
                             ", p=" + std::to_string(p) + ", norm p^" + std::to_string(l) +
                             ", max coeff " + std::to_string(b.max_coeff) + ")"),
          p(p),
          l(l) {}
    long p;
    int l;
};

/// One generator per prime ideal above p, pairwise non-associate, each of
/// norm p^l.  Inert primes return [p]; a single ramified prime returns
/// [1 - xi_(p^t)].  Split primes are found by exhaustive search over
/// coefficient vectors (increasing max coefficient, then support size, then
/// lexicographic order); the remaining primes are Galois images of the first
/// hit.  Results are persisted in the cache.
std::vector<CycloElem> find_prime_generator(const FieldPtr& f, long p, GeneratorCache& cache,
                                            const SearchBudget& budget = {});

}  // namespace cyclo
