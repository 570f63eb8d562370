#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gpk/induce.hpp"

namespace gpk {

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t length = 8;  // random syllables before kernel closing
};

/// Outcome of a sampled property check. Witnesses hold the first few failures.
struct CheckReport {
  explicit CheckReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> details;
  std::size_t first_failure = 0;  // 1-based sample index, 0 if none

  bool passed() const noexcept { return failures == 0; }
  void fail_sample(std::size_t index, std::string witness);
  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

/// Deterministic per-sample seeds derived from a base seed.
std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, std::size_t count);

enum class PhiRule { prefix, syllablewise };

/// Φ(uv) = Φ(u)Φ(v) on sampled kernel pairs; images must lie in the target kernel.
CheckReport check_homomorphism(const SetMapFamily& f, const SampleOptions& opt, PhiRule rule = PhiRule::prefix);

/// Identity families induce identities, and Φ_{second o first} = Φ_second o Φ_first
/// on sampled kernel elements.
CheckReport check_functoriality(const SetMapFamily& first, const SetMapFamily& second, const SampleOptions& opt);

/// Word-level composition with the base point carried along: the image path of
/// the composite equals the second map applied to the first image path starting
/// at first(identity). Exact on raw words, over arbitrary sampled words.
CheckReport check_based_functoriality(const SetMapFamily& first, const SetMapFamily& second,
                                      const SampleOptions& opt);

/// nl and d_nl preserved on kernel samples. Throws Error(non_injective) unless
/// every map of the family is injective.
CheckReport check_isometry(const SetMapFamily& f, const SampleOptions& opt);

/// phi_gamma agrees on a sampled word and on a randomly scrambled equal word.
CheckReport check_well_defined(const SetMapFamily& f, const SampleOptions& opt);

/// Φ_back o Φ_forward = id on kernel samples.
CheckReport check_retraction(const SetMapFamily& forward, const SetMapFamily& back, const SampleOptions& opt);

/// For a bijective family, Φ_{inverse_family(f)} undoes Φ_f on both sides.
CheckReport check_inverse_family(const SetMapFamily& f, const SampleOptions& opt);

/// Images of sampled extension-kernel elements lie in the target extension
/// kernel; over the complete extension both kernel notions and both restricted
/// maps coincide.
CheckReport check_extension(const SetMapFamily& f, const GraphExtension& source_ext, const GraphExtension& target_ext,
                            const SampleOptions& opt);

/// Searches sampled pairs outside the kernel for Φ(uv) != Φ(u)Φ(v). Passes when
/// a witness is found (set maps do not induce homomorphisms on all of G_Γ).
CheckReport find_non_homomorphism_witness(const SetMapFamily& f, const SampleOptions& opt);

/// Geometric oracle: the induced cellular map sends edges to edges or points
/// and 2-cells into cells, and the image of each sampled word's edge path is
/// the edge path of phi_word. Finite groups and psi = identity only.
CheckReport check_complex_agreement(const SetMapFamily& f, const SampleOptions& opt,
                                    std::size_t cap = 100000);

/// Exhaustive over all words of length <= max_len: canonical forms are
/// constant on the classes of the elementary-move graph, differ across
/// classes, and every word reaches its canonical form by forward moves.
CheckReport check_normal_form(const ContextPtr& ctx, std::size_t max_len);

/// Enumerated cells match the closed-form census and every vertex of the
/// 1-skeleton has exactly one outgoing edge per syllable.
CheckReport check_census(const ContextPtr& ctx, std::size_t cap = 100000);

}  // namespace gpk
