#pragma once

// Seeded randomized property suites. Every case is decoded from a vector of
// integer genes, so a failing case can be shrunk gene by gene toward zero and
// replayed exactly.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotdist/seifert.hpp"

namespace knotdist {

struct SuiteResult {
    std::string suite;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string counterexample;  // minimized, empty when everything passed

    bool ok() const { return failed == 0; }
};

// eq5, sequiv, sesquilinear, main-theorem, quadform-oracle, ring-axioms
const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite. Stops at the first failure.
// quadform-oracle checks its whole definite grid plus iters random indefinite cases.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t iters);

std::string format(const SuiteResult& r);

class GeneSource;

// nullopt on success, otherwise a description of the failing case.
using PropertyCheck = std::function<std::optional<std::string>(GeneSource&)>;

// Runs `check` on iters fresh cases; the first failure is shrunk and reported.
// Exceptions thrown by the check count as failures.
SuiteResult run_property(const std::string& name, const PropertyCheck& check, std::uint64_t seed, std::size_t iters);

// Draws genes from an RNG while recording them, or replays a fixed genome.
class GeneSource {
public:
    explicit GeneSource(std::mt19937_64& rng) : rng_(&rng) {}
    explicit GeneSource(std::vector<long> genome) : genes_(std::move(genome)) {}

    // Value in [lo, hi]; replayed genes are clamped, missing ones read as 0.
    long draw(long lo, long hi);

    const std::vector<long>& genes() const { return genes_; }

private:
    std::mt19937_64* rng_ = nullptr;
    std::vector<long> genes_;
    std::size_t pos_ = 0;
};

// V = S + blockdiag([[0, 1], [0, 0]]) with S symmetric, possibly transposed;
// entries in [-max_entry, max_entry].
SeifertMatrix random_seifert(GeneSource& g, std::size_t size, long max_entry = 3);

// Product of elementary row operations, determinant +-1.
IntMatrix random_unimodular(GeneSource& g, std::size_t size);

LaurentPoly random_laurent(GeneSource& g, int min_exp, int max_exp, long max_coeff);

}  // namespace knotdist
