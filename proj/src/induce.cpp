#include "gpk/induce.hpp"

#include <string>

#include "gpk/errors.hpp"

namespace gpk {

namespace {

void check_maps(const Context& source, const Context& target, const InjectiveSimplicialMap& psi,
                const std::vector<SetMap>& maps) {
  if (!(psi.source() == source.graph()) || !(psi.target() == target.graph())) {
    fail(ErrorCode::validation, "vertex map does not run between the family's graphs");
  }
  if (maps.size() != source.vertex_count()) {
    fail(ErrorCode::validation, "family has " + std::to_string(maps.size()) + " maps for " +
                                    std::to_string(source.vertex_count()) + " source vertices");
  }
  for (Vertex v = 0; v < maps.size(); ++v) {
    if (!(maps[v].domain() == source.group(v))) {
      fail(ErrorCode::validation, "map at vertex " + std::to_string(v) + " has domain " + maps[v].domain().describe() +
                                      ", vertex group is " + source.group(v).describe());
    }
    if (!(maps[v].codomain() == target.group(psi(v)))) {
      fail(ErrorCode::validation, "map at vertex " + std::to_string(v) + " has codomain " +
                                      maps[v].codomain().describe() + ", target vertex group is " +
                                      target.group(psi(v)).describe());
    }
  }
}

}  // namespace

SetMapFamily::SetMapFamily(ContextPtr source, ContextPtr target, InjectiveSimplicialMap psi, std::vector<SetMap> maps)
    : source_(std::move(source)), target_(std::move(target)), psi_(std::move(psi)), maps_(std::move(maps)) {
  check_maps(*source_, *target_, psi_, maps_);
}

SetMapFamily::SetMapFamily(ContextPtr source, ContextPtr target, std::vector<SetMap> maps)
    : SetMapFamily(source, target, identity_map(source->graph()), std::move(maps)) {
  if (!(source_->graph() == target_->graph())) {
    fail(ErrorCode::validation, "families without an explicit vertex map need a shared graph");
  }
}

SetMapFamily SetMapFamily::identity(const ContextPtr& ctx) {
  std::vector<SetMap> maps;
  for (const auto& g : ctx->groups()) maps.push_back(SetMap::identity(g));
  return SetMapFamily(ctx, ctx, std::move(maps));
}

SetMapFamily SetMapFamily::uniform(ContextPtr source, ContextPtr target, const SetMap& f) {
  std::vector<SetMap> maps(source->vertex_count(), f);
  return SetMapFamily(std::move(source), std::move(target), std::move(maps));
}

bool SetMapFamily::all_injective() const {
  for (const auto& f : maps_)
    if (!f.is_injective()) return false;
  return true;
}

bool SetMapFamily::all_bijective() const {
  for (const auto& f : maps_)
    if (!f.is_bijective()) return false;
  return true;
}

DirectProductElem SetMapFamily::apply(const DirectProductElem& g) const {
  DirectProductElem out = identity_tuple(*target_);
  for (Vertex v = 0; v < maps_.size(); ++v) out[psi_(v)] = maps_[v].apply(g.at(v));
  return out;
}

SetMapFamily compose(const SetMapFamily& first, const SetMapFamily& second) {
  if (!same_context(first.target(), second.source())) {
    fail(ErrorCode::context_mismatch, "cannot compose families: target of the first is not the source of the second");
  }
  std::vector<SetMap> maps;
  for (Vertex v = 0; v < first.source()->vertex_count(); ++v) {
    maps.push_back(SetMap::compose(first.map(v), second.map(first.psi()(v))));
  }
  return SetMapFamily(first.source(), second.target(), compose(first.psi(), second.psi()), std::move(maps));
}

SetMapFamily inverse_family(const SetMapFamily& f) {
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  if (src.vertex_count() != tgt.vertex_count()) {
    fail(ErrorCode::precondition, "inverse family needs a bijective vertex map");
  }
  std::vector<Vertex> back(tgt.vertex_count());
  for (Vertex v = 0; v < src.vertex_count(); ++v) back[f.psi()(v)] = v;
  auto psi_inv = validate_simplicial_map(back, tgt.graph(), src.graph());

  std::vector<SetMap> maps;
  for (Vertex u = 0; u < tgt.vertex_count(); ++u) {
    const Vertex v = back[u];
    const SetMap& fv = f.map(v);
    if (!fv.is_bijective()) {
      fail(ErrorCode::precondition, "map at vertex " + std::to_string(v) + " is not a bijection: " + fv.describe());
    }
    if (!fv.domain().is_finite()) {
      maps.push_back(SetMap::identity(fv.codomain()));
      continue;
    }
    const Group& cod = fv.codomain();
    const Elem shift = cod.inv(fv.apply(fv.domain().identity()));
    std::vector<Elem> table(cod.order(), 0);
    for (std::size_t x = 0; x < fv.domain().order(); ++x) {
      const Elem y = cod.mul(shift, fv.apply(static_cast<Elem>(x)));
      table[static_cast<std::size_t>(y)] = static_cast<Elem>(x);
    }
    maps.push_back(SetMap::table(cod, fv.domain(), std::move(table)));
  }
  return SetMapFamily(f.target(), f.source(), std::move(psi_inv), std::move(maps));
}

static void require_source(const Word& w, const SetMapFamily& f, const char* op) {
  if (!same_context(w.context_ptr(), f.source())) {
    fail(ErrorCode::context_mismatch, std::string(op) + ": word is not in the family's source graph product");
  }
}

Word phi_word_from(const Word& w, const SetMapFamily& f, const DirectProductElem& base) {
  require_source(w, f, "phi_word");
  const Context& src = *f.source();
  const Context& tgt = *f.target();
  if (base.size() != src.vertex_count()) fail(ErrorCode::invalid_argument, "base tuple has the wrong length");
  DirectProductElem prefix = base;
  Syllables out;
  out.reserve(w.size());
  for (const Syllable& s : w.syllables()) {
    const Vertex image = f.psi()(s.vertex);
    const Group& cod = tgt.group(image);
    const SetMap& fi = f.map(s.vertex);
    const Elem before = prefix[s.vertex];
    const Elem after = src.group(s.vertex).mul(before, s.elem);
    prefix[s.vertex] = after;
    const Elem delta = cod.mul(cod.inv(fi.apply(before)), fi.apply(after));
    if (!cod.is_identity(delta)) out.push_back({image, delta});
  }
  return Word(f.target(), std::move(out));
}

Word phi_word(const Word& w, const SetMapFamily& f) { return phi_word_from(w, f, identity_tuple(*f.source())); }

Word phi_word_syllablewise(const Word& w, const SetMapFamily& f) {
  require_source(w, f, "phi_word_syllablewise");
  Syllables out;
  for (const Syllable& s : w.syllables()) {
    const Vertex image = f.psi()(s.vertex);
    const Elem e = f.map(s.vertex).apply(s.elem);
    if (!f.target()->group(image).is_identity(e)) out.push_back({image, e});
  }
  return Word(f.target(), std::move(out));
}

Word phi_gamma(const Word& w, const SetMapFamily& f) { return normalize(phi_word(w, f)); }

Word phi_kernel(const Word& w, const SetMapFamily& f) {
  require_source(w, f, "phi_kernel");
  if (!in_kernel(w)) fail(ErrorCode::precondition, "phi_kernel: word " + w.to_string() + " is not in the kernel");
  return phi_gamma(w, f);
}

Word phi_kernel_extension(const Word& w, const SetMapFamily& f, const GraphExtension& source_ext,
                          const GraphExtension& target_ext) {
  require_source(w, f, "phi_kernel_extension");
  if (!(source_ext.base() == f.source()->graph()) || !(target_ext.base() == f.target()->graph())) {
    fail(ErrorCode::context_mismatch, "extensions do not extend the family's graphs");
  }
  // psi must extend to a simplicial map between the extended graphs.
  validate_simplicial_map(f.psi().images(), source_ext.extended(), target_ext.extended());
  if (!in_kernel_extension(w, source_ext)) {
    fail(ErrorCode::precondition, "phi_kernel_extension: word " + w.to_string() +
                                      " is not trivial over the extended graph");
  }
  return phi_gamma(w, f);
}

}  // namespace gpk
