#include "gpk/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gpk/complex.hpp"
#include "gpk/errors.hpp"
#include "gpk/oracle.hpp"

namespace gpk {

void CheckReport::fail_sample(std::size_t index, std::string witness) {
  ++failures;
  if (first_failure == 0) first_failure = index;
  if (witnesses.size() < 5) witnesses.push_back(std::move(witness));
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 master(seed ^ 0x5851f42d4c957f2dULL);
  std::vector<std::uint64_t> out(count);
  for (auto& s : out) s = master();
  return out;
}

namespace {

bool same_element(const Word& a, const Word& b) { return words_equal(a, b); }

std::string show(const Word& w) { return w.empty() ? "e" : w.to_string(); }

// Kernel samples of varying length.
Word kernel_sample(std::uint64_t seed, const SampleOptions& opt, const ContextPtr& ctx) {
  return sample_kernel(seed, static_cast<std::size_t>(seed % (opt.length + 1)), ctx);
}

Word word_sample(std::uint64_t seed, const SampleOptions& opt, const ContextPtr& ctx) {
  return sample_word(seed, static_cast<std::size_t>(seed % (opt.length + 1)), ctx);
}

}  // namespace

CheckReport check_homomorphism(const SetMapFamily& f, const SampleOptions& opt, PhiRule rule) {
  CheckReport r{rule == PhiRule::prefix ? "homomorphism" : "homomorphism-syllablewise"};
  const auto phi = [&](const Word& w) {
    return rule == PhiRule::prefix ? phi_kernel(w, f) : normalize(phi_word_syllablewise(normalize(w), f));
  };
  const auto seeds = derive_seeds(opt.seed, 2 * opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word u = kernel_sample(seeds[2 * k], opt, f.source());
    const Word v = kernel_sample(seeds[2 * k + 1], opt, f.source());
    const Word lhs = phi(word_mul(u, v));
    const Word rhs = word_mul(phi(u), phi(v));
    ++r.samples;
    if (!same_element(lhs, rhs)) {
      r.fail_sample(k + 1, "u=" + show(u) + " v=" + show(v) + " phi(uv)=" + show(lhs) + " phi(u)phi(v)=" + show(rhs));
    } else if (rule == PhiRule::prefix && !in_kernel(lhs)) {
      r.fail_sample(k + 1, "image " + show(lhs) + " left the target kernel");
    }
  }
  return r;
}

CheckReport check_functoriality(const SetMapFamily& first, const SetMapFamily& second, const SampleOptions& opt) {
  CheckReport r{"functoriality"};
  const SetMapFamily composite = compose(first, second);
  const SetMapFamily id_source = SetMapFamily::identity(first.source());
  const SetMapFamily id_target = SetMapFamily::identity(first.target());
  std::size_t identity_failures = 0;
  std::size_t composition_failures = 0;
  const auto seeds = derive_seeds(opt.seed, opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = kernel_sample(seeds[k], opt, first.source());
    const Word image = phi_kernel(w, first);
    ++r.samples;
    if (!(phi_kernel(w, id_source) == normalize(w)) || !(phi_kernel(image, id_target) == image)) {
      ++identity_failures;
      r.fail_sample(k + 1, "identity family moved " + show(w));
      continue;
    }
    const Word direct = phi_kernel(w, composite);
    const Word stepwise = phi_kernel(image, second);
    if (!(direct == stepwise)) {
      ++composition_failures;
      r.fail_sample(k + 1, "w=" + show(w) + " composite=" + show(direct) + " stepwise=" + show(stepwise));
    }
  }
  r.detail("identity_failures", std::to_string(identity_failures));
  r.detail("composition_failures", std::to_string(composition_failures));
  return r;
}

CheckReport check_based_functoriality(const SetMapFamily& first, const SetMapFamily& second,
                                      const SampleOptions& opt) {
  CheckReport r{"functoriality-based"};
  const SetMapFamily composite = compose(first, second);
  const auto start = first.apply(identity_tuple(*first.source()));
  const auto seeds = derive_seeds(opt.seed, opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = word_sample(seeds[k], opt, first.source());
    const Word direct = phi_word(w, composite);
    const Word stepwise = phi_word_from(phi_word(w, first), second, start);
    ++r.samples;
    if (!(direct == stepwise)) {
      r.fail_sample(k + 1, "w=" + show(w) + " composite=" + show(direct) + " stepwise=" + show(stepwise));
    }
  }
  return r;
}

CheckReport check_isometry(const SetMapFamily& f, const SampleOptions& opt) {
  if (!f.all_injective()) {
    fail(ErrorCode::non_injective, "isometry check refused: the family contains a non-injective map");
  }
  CheckReport r{"isometry"};
  const auto seeds = derive_seeds(opt.seed, 2 * opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word u = kernel_sample(seeds[2 * k], opt, f.source());
    const Word v = kernel_sample(seeds[2 * k + 1], opt, f.source());
    const Word pu = phi_kernel(u, f);
    const Word pv = phi_kernel(v, f);
    ++r.samples;
    const auto nu = normal_length(u);
    const auto npu = normal_length(pu);
    const auto d = normal_distance(u, v);
    const auto dp = normal_distance(pu, pv);
    if (nu != npu || d != dp) {
      r.fail_sample(k + 1, "u=" + show(u) + " nl " + std::to_string(nu) + "->" + std::to_string(npu) + " d " +
                               std::to_string(d) + "->" + std::to_string(dp));
    }
  }
  return r;
}

CheckReport check_well_defined(const SetMapFamily& f, const SampleOptions& opt) {
  CheckReport r{"welldefined"};
  const auto seeds = derive_seeds(opt.seed, opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = word_sample(seeds[k], opt, f.source());
    std::mt19937_64 rng(seeds[k] + 1);
    const Word other = scramble(w, rng, 4 + opt.length * 2);
    ++r.samples;
    const Word a = phi_gamma(w, f);
    const Word b = phi_gamma(other, f);
    if (!(a == b)) r.fail_sample(k + 1, "w=" + show(w) + " ~ " + show(other) + " images " + show(a) + " vs " + show(b));
  }
  return r;
}

CheckReport check_retraction(const SetMapFamily& forward, const SetMapFamily& back, const SampleOptions& opt) {
  CheckReport r{"retraction"};
  const auto seeds = derive_seeds(opt.seed, opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = kernel_sample(seeds[k], opt, forward.source());
    const Word round = phi_kernel(phi_kernel(w, forward), back);
    ++r.samples;
    if (!(round == normalize(w))) r.fail_sample(k + 1, "w=" + show(w) + " came back as " + show(round));
  }
  return r;
}

CheckReport check_inverse_family(const SetMapFamily& f, const SampleOptions& opt) {
  CheckReport r{"inverse"};
  const SetMapFamily inv = inverse_family(f);
  const auto seeds = derive_seeds(opt.seed, 2 * opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = kernel_sample(seeds[2 * k], opt, f.source());
    const Word t = kernel_sample(seeds[2 * k + 1], opt, f.target());
    ++r.samples;
    const Word back = phi_kernel(phi_kernel(w, f), inv);
    const Word forth = phi_kernel(phi_kernel(t, inv), f);
    if (!(back == normalize(w))) r.fail_sample(k + 1, "source " + show(w) + " came back as " + show(back));
    else if (!(forth == normalize(t))) r.fail_sample(k + 1, "target " + show(t) + " came back as " + show(forth));
  }
  return r;
}

CheckReport check_extension(const SetMapFamily& f, const GraphExtension& source_ext, const GraphExtension& target_ext,
                            const SampleOptions& opt) {
  CheckReport r{"extension"};
  const auto complete_s =
      validate_extension(f.source()->graph(), SimplicialGraph::complete(f.source()->vertex_count()));
  const auto complete_t =
      validate_extension(f.target()->graph(), SimplicialGraph::complete(f.target()->vertex_count()));
  const auto seeds = derive_seeds(opt.seed, 3 * opt.samples);
  std::size_t warnings = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    ++r.samples;
    const auto sample = sample_kernel_extension(seeds[3 * k], 1 + seeds[3 * k] % 3, f.source(), source_ext);
    if (sample.no_added_edges) ++warnings;
    const Word& w = sample.word;
    if (!in_kernel_extension(w, source_ext) || !in_kernel(w)) {
      r.fail_sample(k + 1, "sampler produced " + show(w) + " outside the extension kernel");
      continue;
    }
    const Word image = phi_kernel_extension(w, f, source_ext, target_ext);
    if (!in_kernel_extension(image, target_ext) || !in_kernel(image)) {
      r.fail_sample(k + 1, "image of " + show(w) + " is " + show(image) + ", outside the target extension kernel");
      continue;
    }
    const Word any = word_sample(seeds[3 * k + 1], opt, f.source());
    if (in_kernel_extension(any, complete_s) != in_kernel(any)) {
      r.fail_sample(k + 1, "complete extension disagrees with the kernel on " + show(any));
      continue;
    }
    const Word kw = kernel_sample(seeds[3 * k + 2], opt, f.source());
    if (!(phi_kernel_extension(kw, f, complete_s, complete_t) == phi_kernel(kw, f))) {
      r.fail_sample(k + 1, "complete-extension restriction differs from phi_kernel on " + show(kw));
    }
  }
  r.detail("sampler_warnings", std::to_string(warnings));
  return r;
}

CheckReport find_non_homomorphism_witness(const SetMapFamily& f, const SampleOptions& opt) {
  CheckReport r{"set-map-witness"};
  const auto seeds = derive_seeds(opt.seed, 2 * opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word u = word_sample(seeds[2 * k], opt, f.source());
    const Word v = word_sample(seeds[2 * k + 1], opt, f.source());
    ++r.samples;
    if (in_kernel(u) || in_kernel(v)) continue;
    const Word lhs = phi_gamma(word_mul(u, v), f);
    const Word rhs = word_mul(phi_gamma(u, f), phi_gamma(v, f));
    if (!(lhs == rhs)) {
      r.detail("witness", "u=" + show(u) + " v=" + show(v) + " phi(uv)=" + show(lhs) + " phi(u)phi(v)=" + show(rhs));
      return r;
    }
  }
  r.fail_sample(r.samples, "no pair outside the kernel separated phi(uv) from phi(u)phi(v)");
  return r;
}

CheckReport check_complex_agreement(const SetMapFamily& f, const SampleOptions& opt, std::size_t cap) {
  CheckReport r{"oracle-agreement"};
  const auto source = Skeleton2::build(f.source(), cap);
  const auto target = Skeleton2::build(f.target(), cap);
  const auto map = induced_complex_map(source, target, f);
  r.detail("directed_edges", std::to_string(map.directed_edges));
  r.detail("collapsed_edges", std::to_string(map.collapsed_edges));
  if (map.edge_failures || map.cell_failures) {
    r.fail_sample(0, "cellular map broke " + std::to_string(map.edge_failures) + " edges and " +
                         std::to_string(map.cell_failures) + " cells");
  }
  const auto seeds = derive_seeds(opt.seed, opt.samples);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    const Word w = word_sample(seeds[k], opt, f.source());
    ++r.samples;
    if (!path_images_agree(source, target, map, f, w)) {
      r.fail_sample(k + 1, "path image of " + show(w) + " differs from the path of phi_word");
    }
  }
  return r;
}

CheckReport check_normal_form(const ContextPtr& ctx, std::size_t max_len) {
  CheckReport r{"normal-form"};
  const MoveGraph g = build_move_graph(*ctx, max_len);
  const auto component = move_components(g);
  std::vector<bool> canonical_node(g.nodes.size(), false);
  std::vector<Syllables> canonical(g.identity_free);
  std::map<std::uint32_t, std::size_t> representative;  // component -> first node
  std::map<Syllables, std::uint32_t, ShortLex> owner;    // canonical form -> component
  for (std::size_t n = 0; n < g.identity_free; ++n) {
    canonical[n] = canonical_syllables(*ctx, g.nodes[n]);
    if (canonical[n] == g.nodes[n]) canonical_node[n] = true;
  }
  for (std::size_t n = 0; n < g.identity_free; ++n) {
    ++r.samples;
    const auto c = component[n];
    auto [rit, fresh] = representative.try_emplace(c, n);
    if (!fresh && canonical[rit->second] != canonical[n]) {
      r.fail_sample(n + 1, "equal words " + format_syllables(g.nodes[rit->second]) + " and " +
                               format_syllables(g.nodes[n]) + " got different canonical forms");
      continue;
    }
    auto [oit, new_form] = owner.try_emplace(canonical[n], c);
    if (!new_form && oit->second != c) {
      r.fail_sample(n + 1, "canonical form " + format_syllables(canonical[n]) + " shared by two move classes");
    }
  }
  const auto reach = reaches(g, canonical_node);
  std::size_t unreachable = 0;
  for (std::size_t n = 0; n < g.identity_free; ++n) {
    if (!reach[n]) {
      ++unreachable;
      r.fail_sample(n + 1, format_syllables(g.nodes[n]) + " cannot reach its canonical form by moves");
    }
  }
  r.detail("words", std::to_string(g.identity_free));
  r.detail("classes", std::to_string(owner.size()));
  r.detail("unreachable", std::to_string(unreachable));
  return r;
}

CheckReport check_census(const ContextPtr& ctx, std::size_t cap) {
  CheckReport r{"census"};
  const auto sk = Skeleton2::build(ctx, cap);
  const CellCensus counted{sk.vertex_count(), sk.edges().size(), sk.triangles().size(), sk.squares().size()};
  const CellCensus predicted = closed_form_census(*ctx);
  r.detail("V", std::to_string(counted.vertices));
  r.detail("E", std::to_string(counted.edges));
  r.detail("T", std::to_string(counted.triangles));
  r.detail("Sq", std::to_string(counted.squares));
  ++r.samples;
  if (!(counted == predicted)) r.fail_sample(1, "enumerated cells disagree with the closed form");
  // Cayley property: outgoing labels at each vertex are exactly the syllables, once each.
  std::vector<std::vector<Syllable>> out(sk.vertex_count());
  for (const auto& [u, v] : sk.edges()) {
    out[u].push_back(sk.label(u, v));
    out[v].push_back(sk.label(v, u));
  }
  Syllables expected = sk.generators();
  const auto less = [](const Syllable& a, const Syllable& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.elem < b.elem;
  };
  std::sort(expected.begin(), expected.end(), less);
  for (std::size_t u = 0; u < sk.vertex_count(); ++u) {
    ++r.samples;
    std::sort(out[u].begin(), out[u].end(), less);
    if (out[u] != expected) r.fail_sample(u + 1, "vertex " + std::to_string(u) + " breaks the Cayley labelling");
  }
  return r;
}

}  // namespace gpk
