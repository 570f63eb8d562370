#include "gpk/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gpk/complex.hpp"
#include "gpk/config.hpp"
#include "gpk/kernel.hpp"
#include "gpk/oracle.hpp"
#include "gpk/verify.hpp"

namespace gpk {

namespace {

bool needs_quotes(std::string_view v) {
  if (v.empty()) return true;
  for (char c : v) {
    if (c == ' ' || c == '"' || c == '\\' || c == '=' || c == '\t' || c == '\n') return true;
  }
  return false;
}

bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  for (char c : k) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::string format_record(const Record& record) {
  std::string out;
  for (const auto& [key, value] : record) {
    if (!valid_key(key)) fail(ErrorCode::invalid_argument, "record key '" + key + "' is not an identifier");
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    if (!needs_quotes(value)) {
      out += value;
      continue;
    }
    out += '"';
    for (char c : value) {
      if (c == '\n') {
        out += "\\n";
        continue;
      }
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
  }
  return out;
}

Record parse_record(std::string_view line) {
  Record out;
  std::size_t i = 0;
  const auto bad = [&](const std::string& why) {
    fail(ErrorCode::invalid_argument, "malformed record at column " + std::to_string(i + 1) + ": " + why);
  };
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    const auto eq = line.find('=', i);
    if (eq == std::string_view::npos) bad("missing '='");
    std::string key(line.substr(i, eq - i));
    if (!valid_key(key)) bad("bad key '" + key + "'");
    i = eq + 1;
    std::string value;
    if (i < line.size() && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char c = line[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c == '\\') {
          if (i >= line.size()) bad("dangling escape");
          c = line[i++];
          if (c == 'n') c = '\n';
          else if (c != '"' && c != '\\') bad("unknown escape");
        }
        value += c;
      }
      if (!closed) bad("unterminated quote");
      if (i < line.size() && line[i] != ' ') bad("junk after quoted value");
    } else {
      const auto end = line.find(' ', i);
      value = std::string(line.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i));
      if (value.empty() || !(!needs_quotes(value))) bad("unquoted value must be non-empty and plain");
      i = end == std::string_view::npos ? line.size() : end;
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::out_of_range:
      return exit_code::invalid_input;
    case ErrorCode::validation:
      return exit_code::validation;
    case ErrorCode::precondition:
      return exit_code::precondition;
    case ErrorCode::unsupported:
      return exit_code::unsupported;
    case ErrorCode::non_injective:
      return exit_code::non_injective;
    case ErrorCode::budget_exceeded:
      return exit_code::budget;
    case ErrorCode::context_mismatch:
      return exit_code::context_mismatch;
    case ErrorCode::overflow:
      return exit_code::overflow;
    case ErrorCode::config:
      return exit_code::config;
    case ErrorCode::internal:
      return exit_code::internal;
  }
  return exit_code::internal;
}

namespace {

constexpr const char* exit_code_help =
    "Exit status:\n"
    "  0   success, every check passed\n"
    "  1   a verification check failed\n"
    "  2   bad command line\n"
    "  3   config error (parse, unknown name, invalid table or extension)\n"
    "  4   invalid input (word syntax, element or vertex out of range)\n"
    "  5   validation error (graph or simplicial map)\n"
    "  6   precondition violated (e.g. word not in the kernel)\n"
    "  7   unsupported (non-injective simplicial map, infinite group complex)\n"
    "  8   family not injective (isometry suite)\n"
    "  9   budget exceeded (complex cap, ball budget)\n"
    "  10  context mismatch\n"
    "  11  integer overflow\n"
    "  12  internal error";

enum class Format { text, kv, both };

// Accumulates one command's output; text and records stay in step.
class Report {
 public:
  explicit Report(Format format) : format_(format) {}

  void text(std::string line) { text_.push_back(std::move(line)); }
  void record(Record r) { records_.push_back(std::move(r)); }

  void flush(std::ostream& out) const {
    if (format_ != Format::kv) {
      for (const auto& l : text_) out << l << '\n';
    }
    if (format_ != Format::text) {
      for (const auto& r : records_) out << format_record(r) << '\n';
    }
  }

 private:
  Format format_;
  std::vector<std::string> text_;
  std::vector<Record> records_;
};

std::string show(const Word& w) { return w.empty() ? "e" : w.to_string(); }

std::string show_tuple(const DirectProductElem& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(t[k]);
  }
  return s + ")";
}

std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

struct Options {
  std::string config_path;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::size_t length = 8;

  std::string context;
  std::string word;
  std::string word2;
  std::string extension;
  std::string family;
  std::vector<std::string> families;
  std::vector<std::string> contexts;
  std::string second;
  std::string cofamily;
  std::string source_extension;
  std::string target_extension;
  std::string suite;
  std::string rule = "prefix";
  std::size_t max_length = 6;
  std::size_t cap = Skeleton2::default_cap;
  std::size_t radius = 3;
  std::size_t budget = 200000;
  std::string strategy = "right";
  bool census = false;
  bool kernel = false;
  std::string export_path;
};

SampleOptions sample_options(const Options& o) { return SampleOptions{o.seed, o.samples, o.length}; }

void emit_check(Report& rep, const CheckReport& r, const Record& labels, std::uint64_t seed) {
  const std::string status = r.passed() ? "PASS" : "FAIL";
  std::string head = status + " " + r.suite;
  for (const auto& [k, v] : labels) head += " " + k + "=" + v;
  head += " seed=" + std::to_string(seed) + " samples=" + std::to_string(r.samples) +
          " failures=" + std::to_string(r.failures);
  if (r.first_failure) head += " first_failure=" + std::to_string(r.first_failure);
  rep.text(head);
  for (const auto& [k, v] : r.details) rep.text("  " + k + ": " + v);
  for (const auto& w : r.witnesses) rep.text("  witness: " + w);

  Record rec{{"suite", r.suite}, {"status", status}};
  for (const auto& kv : labels) rec.push_back(kv);
  rec.emplace_back("seed", std::to_string(seed));
  rec.emplace_back("samples", std::to_string(r.samples));
  rec.emplace_back("failures", std::to_string(r.failures));
  rec.emplace_back("first_failure", std::to_string(r.first_failure));
  for (const auto& kv : r.details) rec.push_back(kv);
  for (std::size_t k = 0; k < r.witnesses.size(); ++k) rec.emplace_back("witness" + std::to_string(k + 1), r.witnesses[k]);
  rep.record(std::move(rec));
}

std::vector<std::string> family_list(const Options& o) {
  std::vector<std::string> out = o.families;
  if (!o.family.empty()) out.insert(out.begin(), o.family);
  if (out.empty()) fail(ErrorCode::invalid_argument, "--family is required for this suite");
  return out;
}

std::vector<std::string> context_list(const Options& o) {
  std::vector<std::string> out = o.contexts;
  if (!o.context.empty()) out.insert(out.begin(), o.context);
  if (out.empty()) fail(ErrorCode::invalid_argument, "--context is required for this suite");
  return out;
}

const std::string& required(const std::string& value, const char* flag) {
  if (value.empty()) fail(ErrorCode::invalid_argument, std::string(flag) + " is required");
  return value;
}

Word parse_word(const Config& cfg, const std::string& context, const std::string& text) {
  return Word::parse(cfg.context(required(context, "--context")), text);
}

const GraphExtension& extension_for(const Config& cfg, const std::string& name, const SimplicialGraph& graph) {
  const auto& ext = cfg.extension(name).extension;
  if (!(ext.base() == graph)) {
    fail(ErrorCode::context_mismatch, "extension '" + name + "' does not extend the graph " + graph.describe());
  }
  return ext;
}

// Returns true when every assertion of the command passed.
bool run_normalize(const Config& cfg, const Options& o, Report& rep) {
  const Word w = normalize(parse_word(cfg, o.context, o.word));
  rep.text(show(w));
  rep.text("nl=" + std::to_string(w.size()));
  rep.record({{"command", "normalize"}, {"context", o.context}, {"word", show(w)}, {"nl", std::to_string(w.size())}});
  return true;
}

bool run_mul(const Config& cfg, const Options& o, Report& rep) {
  const Word u = parse_word(cfg, o.context, o.word);
  const Word v = parse_word(cfg, o.context, o.word2);
  const Word w = word_mul(u, v);
  rep.text(show(w));
  rep.text("nl=" + std::to_string(w.size()));
  rep.record({{"command", "mul"}, {"context", o.context}, {"word", show(w)}, {"nl", std::to_string(w.size())}});
  return true;
}

bool run_inv(const Config& cfg, const Options& o, Report& rep) {
  const Word w = word_inv(parse_word(cfg, o.context, o.word));
  rep.text(show(w));
  rep.text("nl=" + std::to_string(w.size()));
  rep.record({{"command", "inv"}, {"context", o.context}, {"word", show(w)}, {"nl", std::to_string(w.size())}});
  return true;
}

bool run_project(const Config& cfg, const Options& o, Report& rep) {
  const auto t = project(parse_word(cfg, o.context, o.word));
  rep.text(show_tuple(t));
  rep.record({{"command", "project"}, {"context", o.context}, {"tuple", show_tuple(t)}});
  return true;
}

bool run_kernel_test(const Config& cfg, const Options& o, Report& rep) {
  const Word w = parse_word(cfg, o.context, o.word);
  Record rec{{"command", "kernel-test"}, {"context", o.context}, {"word", show(w)}};
  bool member;
  if (o.extension.empty()) {
    member = in_kernel(w);
    rep.text(std::string(member ? "in" : "not in") + " the kernel of the projection");
  } else {
    member = in_kernel_extension(w, extension_for(cfg, o.extension, w.context().graph()));
    rep.text(std::string(member ? "in" : "not in") + " the kernel of the extension " + o.extension);
    rec.emplace_back("extension", o.extension);
  }
  rec.emplace_back("in_kernel", member ? "yes" : "no");
  rep.record(std::move(rec));
  return true;
}

bool run_induce(const Config& cfg, const Options& o, Report& rep) {
  const auto& fname = required(o.family, "--family");
  const SetMapFamily& f = cfg.family(fname);
  const Word w = Word::parse(f.source(), o.word);
  const Word raw = phi_word(w, f);
  const Word canon = phi_gamma(w, f);
  const bool kernel = in_kernel(w);
  rep.text("image: " + show(raw));
  rep.text("canonical: " + show(canon));
  rep.text("nl: " + std::to_string(normal_length(w)) + " -> " + std::to_string(canon.size()));
  rep.text(std::string("kernel: ") + (kernel ? "yes" : "no"));
  Record rec{{"command", "induce"},
             {"family", fname},
             {"word", show(w)},
             {"image", show(raw)},
             {"canonical", show(canon)},
             {"nl_source", std::to_string(normal_length(w))},
             {"nl_image", std::to_string(canon.size())},
             {"in_kernel", kernel ? "yes" : "no"}};
  if (!o.source_extension.empty() || !o.target_extension.empty()) {
    const auto& se = extension_for(cfg, required(o.source_extension, "--source-extension"), f.source()->graph());
    const auto& te = extension_for(cfg, required(o.target_extension, "--target-extension"), f.target()->graph());
    const Word img = phi_kernel_extension(w, f, se, te);
    rep.text("extension image: " + show(img));
    rec.emplace_back("extension_image", show(img));
  } else if (o.kernel) {
    const Word img = phi_kernel(w, f);  // throws outside the kernel
    rec.emplace_back("kernel_image", show(img));
  }
  rep.record(std::move(rec));
  return true;
}

bool run_verify(const Config& cfg, const Options& o, Report& rep) {
  const SampleOptions opt = sample_options(o);
  bool ok = true;
  const auto emit = [&](const CheckReport& r, const Record& labels) {
    emit_check(rep, r, labels, o.seed);
    ok = ok && r.passed();
  };
  const std::string& s = o.suite;
  if (s == "homomorphism") {
    const PhiRule rule = o.rule == "syllablewise" ? PhiRule::syllablewise : PhiRule::prefix;
    for (const auto& name : family_list(o)) {
      emit(check_homomorphism(cfg.family(name), opt, rule), {{"family", name}, {"rule", o.rule}});
    }
  } else if (s == "negative-control") {
    // Passes when the syllable-wise rule is caught breaking the homomorphism law.
    for (const auto& name : family_list(o)) {
      CheckReport r = check_homomorphism(cfg.family(name), opt, PhiRule::syllablewise);
      CheckReport c{"negative-control"};
      c.samples = r.samples;
      c.details = r.details;
      c.detail("broken_samples", std::to_string(r.failures));
      c.detail("caught_at", std::to_string(r.first_failure));
      if (r.failures == 0) c.fail_sample(r.samples, "syllable-wise rule never failed");
      emit(c, {{"family", name}});
    }
  } else if (s == "functoriality") {
    const auto& first = required(o.family, "--family");
    const auto& second = required(o.second, "--second");
    const auto& f = cfg.family(first);
    const auto& g = cfg.family(second);
    emit(check_functoriality(f, g, opt), {{"family", first}, {"second", second}});
    emit(check_based_functoriality(f, g, opt), {{"family", first}, {"second", second}});
  } else if (s == "isometry") {
    for (const auto& name : family_list(o)) emit(check_isometry(cfg.family(name), opt), {{"family", name}});
  } else if (s == "lengths") {
    const auto& name = required(o.family, "--family");
    const SetMapFamily& f = cfg.family(name);
    const Word w = Word::parse(f.source(), o.word);
    const Word img = phi_gamma(w, f);
    const std::size_t before = normal_length(w);
    rep.text("nl " + std::to_string(before) + " -> " + std::to_string(img.size()) + "  " + show(normalize(w)) +
             "  |->  " + show(img));
    rep.record({{"suite", "lengths"},
                {"family", name},
                {"word", show(w)},
                {"image", show(img)},
                {"nl_source", std::to_string(before)},
                {"nl_image", std::to_string(img.size())},
                {"injective", f.all_injective() ? "yes" : "no"}});
  } else if (s == "welldefined") {
    for (const auto& name : family_list(o)) emit(check_well_defined(cfg.family(name), opt), {{"family", name}});
  } else if (s == "retraction") {
    const auto& fwd = required(o.family, "--family");
    const auto& back = required(o.cofamily, "--cofamily");
    const CheckReport r = check_retraction(cfg.family(fwd), cfg.family(back), opt);
    emit(r, {{"family", fwd}, {"cofamily", back}});
    if (r.passed()) rep.text("Φ is a retract of Ψ");
  } else if (s == "inverse") {
    for (const auto& name : family_list(o)) emit(check_inverse_family(cfg.family(name), opt), {{"family", name}});
  } else if (s == "witness") {
    for (const auto& name : family_list(o)) {
      emit(find_non_homomorphism_witness(cfg.family(name), opt), {{"family", name}});
    }
  } else if (s == "extension") {
    const auto& name = required(o.family, "--family");
    const SetMapFamily& f = cfg.family(name);
    const auto& se_name = required(o.source_extension, "--source-extension");
    const auto& te_name = required(o.target_extension, "--target-extension");
    const auto& se = extension_for(cfg, se_name, f.source()->graph());
    const auto& te = extension_for(cfg, te_name, f.target()->graph());
    emit(check_extension(f, se, te, opt),
         {{"family", name}, {"source_extension", se_name}, {"target_extension", te_name}});
  } else if (s == "census") {
    for (const auto& name : context_list(o)) emit(check_census(cfg.context(name), o.cap), {{"context", name}});
  } else if (s == "oracle-agreement") {
    for (const auto& name : family_list(o)) {
      emit(check_complex_agreement(cfg.family(name), opt, o.cap), {{"family", name}});
    }
  } else if (s == "normal-form") {
    for (const auto& name : context_list(o)) {
      emit(check_normal_form(cfg.context(name), o.max_length),
           {{"context", name}, {"max_length", std::to_string(o.max_length)}});
    }
  } else {
    fail(ErrorCode::invalid_argument, "unknown suite '" + s + "'");
  }
  return ok;
}

bool run_complex(const Config& cfg, const Options& o, Report& rep) {
  const auto& name = required(o.context, "--context");
  const auto sk = Skeleton2::build(cfg.context(name), o.cap);
  const CellCensus c = cell_census(sk);
  rep.text("V=" + std::to_string(c.vertices) + " E=" + std::to_string(c.edges) + " T=" + std::to_string(c.triangles) +
           " Sq=" + std::to_string(c.squares));
  rep.record({{"command", "complex"},
              {"context", name},
              {"V", std::to_string(c.vertices)},
              {"E", std::to_string(c.edges)},
              {"T", std::to_string(c.triangles)},
              {"Sq", std::to_string(c.squares)}});
  if (!o.export_path.empty()) {
    std::ofstream file(o.export_path);
    if (!file) fail(ErrorCode::invalid_argument, "cannot write " + o.export_path);
    export_edge_list(sk, file);
  }
  return true;
}

bool run_growth(const Config& cfg, const Options& o, Report& rep) {
  const auto& name = required(o.context, "--context");
  const Strategy strategy = o.strategy == "left" ? Strategy::left : Strategy::right;
  std::vector<std::size_t> rows;
  if (o.kernel) {
    rows = kernel_census(cfg.context(name), o.radius, strategy, o.budget);
  } else {
    rows = enumerate_ball(cfg.context(name), o.radius, strategy, o.budget).spheres;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) rep.text(std::to_string(r) + "," + std::to_string(rows[r]));
  rep.record({{"command", "growth"},
              {"context", name},
              {"table", o.kernel ? "kernel" : "spheres"},
              {"strategy", o.strategy},
              {"radius", std::to_string(o.radius)},
              {"counts", join(rows, ',')}});
  return true;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph products of groups: normal forms, kernels and induced kernel maps", "gpk"};
  app.footer(exit_code_help);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config_path, "Fixture file (JSON); the built-in fixtures when omitted");
  app.add_option("--format", o.format, "Report form")->check(CLI::IsMember({"text", "kv", "both"}));
  app.add_option("--seed", o.seed, "Base seed for all sampling")->capture_default_str();
  app.add_option("--samples", o.samples, "Samples per check")->capture_default_str();
  app.add_option("--length", o.length, "Maximum random syllables per sample")->capture_default_str();

  const auto word_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--context", o.context, "Context name")->required();
    sub->add_option("--word", o.word, "Word as v<i>:<elem> tokens")->required();
    return sub;
  };
  auto* normalize_cmd = word_command("normalize", "Canonical form and normal length");
  auto* mul_cmd = word_command("mul", "Product of --word and --word2");
  mul_cmd->add_option("--word2", o.word2, "Right factor")->required();
  auto* inv_cmd = word_command("inv", "Inverse");
  auto* project_cmd = word_command("project", "Image in the direct product of the vertex groups");
  auto* kernel_cmd = word_command("kernel-test", "Membership in the kernel of the projection");
  kernel_cmd->add_option("--extension", o.extension, "Test the kernel of this graph extension instead");

  auto* induce_cmd = app.add_subcommand("induce", "Apply the map induced by a set-map family");
  induce_cmd->add_option("--family", o.family, "Family name")->required();
  induce_cmd->add_option("--word", o.word, "Word over the source context")->required();
  induce_cmd->add_flag("--kernel", o.kernel, "Require the word to lie in the kernel");
  induce_cmd->add_option("--source-extension", o.source_extension, "Extension of the source graph");
  induce_cmd->add_option("--target-extension", o.target_extension, "Extension of the target graph");

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"homomorphism", "functoriality", "isometry", "welldefined", "retraction", "census",
                             "oracle-agreement", "normal-form", "negative-control", "inverse", "witness",
                             "extension", "lengths"}));
  verify_cmd->add_option("--family", o.family, "Family under test");
  verify_cmd->add_option("--families", o.families, "Further families, checked in the order given");
  verify_cmd->add_option("--second", o.second, "Second family of a composition (functoriality)");
  verify_cmd->add_option("--cofamily", o.cofamily, "Left inverse candidate (retraction)");
  verify_cmd->add_option("--context", o.context, "Context (census, normal-form)");
  verify_cmd->add_option("--contexts", o.contexts, "Further contexts");
  verify_cmd->add_option("--source-extension", o.source_extension, "Extension of the source graph");
  verify_cmd->add_option("--target-extension", o.target_extension, "Extension of the target graph");
  verify_cmd->add_option("--rule", o.rule, "Word map rule (homomorphism)")
      ->check(CLI::IsMember({"prefix", "syllablewise"}))
      ->capture_default_str();
  verify_cmd->add_option("--word", o.word, "Word (lengths)");
  verify_cmd->add_option("--max-length", o.max_length, "Word length bound (normal-form)")->capture_default_str();
  verify_cmd->add_option("--cap", o.cap, "Complex vertex cap")->capture_default_str();

  auto* complex_cmd = app.add_subcommand("complex", "Build the 2-skeleton of the polyhedral product");
  complex_cmd->add_option("--context", o.context, "Context name (finite groups)")->required();
  complex_cmd->add_flag("--census", o.census, "Print the cell census (always reported)");
  complex_cmd->add_option("--export", o.export_path, "Write the labelled edge list 'u v label' to this file");
  complex_cmd->add_option("--cap", o.cap, "Vertex cap")->capture_default_str();

  auto* growth_cmd = app.add_subcommand("growth", "Sphere sizes of the normal-length ball, as radius,count rows");
  growth_cmd->add_option("--context", o.context, "Context name (finite groups)")->required();
  growth_cmd->add_option("--radius", o.radius, "Ball radius")->capture_default_str();
  growth_cmd->add_flag("--kernel", o.kernel, "Count kernel elements per normal length instead");
  growth_cmd->add_option("--strategy", o.strategy, "Multiply generators on the right or left")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  growth_cmd->add_option("--budget", o.budget, "Element budget")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("gpk");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  const Format format = o.format == "kv" ? Format::kv : o.format == "both" ? Format::both : Format::text;
  Report rep(format);
  try {
    std::optional<Config> loaded;
    if (!o.config_path.empty()) loaded = load_config(o.config_path);
    const Config& cfg = loaded ? *loaded : default_config();

    bool ok = true;
    if (normalize_cmd->parsed()) ok = run_normalize(cfg, o, rep);
    else if (mul_cmd->parsed()) ok = run_mul(cfg, o, rep);
    else if (inv_cmd->parsed()) ok = run_inv(cfg, o, rep);
    else if (project_cmd->parsed()) ok = run_project(cfg, o, rep);
    else if (kernel_cmd->parsed()) ok = run_kernel_test(cfg, o, rep);
    else if (induce_cmd->parsed()) ok = run_induce(cfg, o, rep);
    else if (verify_cmd->parsed()) ok = run_verify(cfg, o, rep);
    else if (complex_cmd->parsed()) ok = run_complex(cfg, o, rep);
    else if (growth_cmd->parsed()) ok = run_growth(cfg, o, rep);
    rep.flush(out);
    return ok ? exit_code::ok : exit_code::check_failed;
  } catch (const ConfigError& e) {
    for (const auto& p : e.problems()) err << "config: " << p << '\n';
    return exit_code::config;
  } catch (const Error& e) {
    rep.flush(out);
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace gpk
