// ordcomb: command-line front end. Every query prints one JSON record:
//
//   {"command":..., "digest":..., "status":"found"|"none"|"error",
//    "code":..., "witness":..., "verified":..., "elapsed_ms":...}
//
// Exit status: 0 found, 1 none, 2 input error, 3 window exhausted.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordcomb/bqo.hpp"
#include "ordcomb/fraisse.hpp"
#include "ordcomb/omega.hpp"
#include "ordcomb/parse.hpp"
#include "ordcomb/theta.hpp"

using namespace ordcomb;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string base;
  std::uint32_t window = 8;
  std::size_t depth = 1;
  std::size_t guard = 1;
  std::uint32_t colors = 0;  // 0: take it from the array
  std::size_t budget = 10;
  std::size_t target = 3;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
  std::string file;
  std::vector<std::string> args;
};

struct Report {
  std::string status = "found";
  Json witness;
  bool verified = false;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArray, "cannot open array file " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Report none() {
  Report r;
  r.status = "none";
  r.witness = nullptr;
  return r;
}

void need_args(const Options& o, std::size_t n, const char* what) {
  if (o.args.size() != n) throw Error(ErrorCode::Parse, std::string("expected ") + what);
}

BaseOrder base_or(const Options& o, const char* fallback) {
  return parse_base_order(o.base.empty() ? fallback : o.base);
}

Report compare_omega(const Options& o) {
  need_args(o, 2, "two omega terms");
  const BaseOrder x = base_or(o, "omega");
  const OmegaTerm s = parse_omega_term(o.args[0]);
  const OmegaTerm t = parse_omega_term(o.args[1]);
  const auto ord = omega_compare(x, s, t);
  Report r;
  r.witness = std::string(to_string(ord));
  r.verified = omega_compare(x, t, s) == reverse(ord) && ((ord == 0) == (s == t));
  return r;
}

Report compare_theta(const Options& o) {
  need_args(o, 2, "two theta terms");
  const BaseOrder x = base_or(o, "fin:1");
  const ThetaTerm s = parse_theta_term(o.args[0]);
  const ThetaTerm t = parse_theta_term(o.args[1]);
  const auto ord = theta_compare(x, s, t);
  Report r;
  r.witness = std::string(to_string(ord));
  r.verified = theta_compare(x, t, s) == reverse(ord) && ((ord == 0) == (s == t));
  return r;
}

Report enumerate_omega(const Options& o) {
  need_args(o, 0, "no positional arguments");
  const BaseOrder x = base_or(o, "fin:2");
  const auto terms = omega_enumerate(x, o.budget);
  Report r;
  r.witness = Json::array();
  r.verified = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    r.witness.push_back(terms[i].str());
    if (i > 0 && omega_compare(x, terms[i - 1], terms[i]) >= 0) r.verified = false;
  }
  return r;
}

template <class T, class Cmp, class Show>
Report chain_report(const std::vector<T>& chain, Cmp&& cmp, Show&& show) {
  Report r;
  r.witness = Json::array();
  r.verified = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    r.witness.push_back(show(chain[i]));
    if (i > 0 && cmp(chain[i], chain[i - 1]) >= 0) r.verified = false;
  }
  return r;
}

Report descend(const Options& o) {
  need_args(o, 1, "one of omega, theta, base");
  if (o.budget == 0) throw Error(ErrorCode::OutOfRange, "budget must be at least 1");
  const BaseOrder x = base_or(o, "omega*");
  const std::string& what = o.args[0];
  if (what == "base" || what == "omega") {
    auto d = base_descent(x);
    if (!d) return none();
    if (what == "base") {
      return chain_report(d->prefix(o.budget), [&](const Element& a, const Element& b) { return base_compare(x, a, b); },
                          [](const Element& e) { return e.str(); });
    }
    return chain_report(omega_descend_lift(*d).prefix(o.budget),
                        [&](const OmegaTerm& a, const OmegaTerm& b) { return omega_compare(x, a, b); },
                        [](const OmegaTerm& t) { return t.str(); });
  }
  if (what == "theta") {
    auto d = theta_descend_search(x, o.budget);
    if (!d) return none();
    Report r = chain_report(d->chain, [&](const ThetaTerm& a, const ThetaTerm& b) { return theta_compare(x, a, b); },
                            [](const ThetaTerm& t) { return t.str(); });
    if (d->source == ThetaDescent::Source::ShiftCertificate) {
      // The chain is t, s(t), s(s(t)), ... for a shift s; it descends
      // forever because the first step does and s is an embedding.
      Json chain = std::move(r.witness);
      r.witness = Json{{"source", "shift"}, {"chain", std::move(chain)}};
    }
    return r;
  }
  throw Error(ErrorCode::Parse, "descend expects omega, theta or base, got '" + what + "'");
}

Report embed(const Options& o) {
  need_args(o, 2, "two order terms");
  const OrderTerm s = parse_order_term(o.args[0]);
  const OrderTerm t = parse_order_term(o.args[1]);
  if (!embeds(s, t)) return none();
  Report r;
  r.witness = Json{{"source", s.str()}, {"target", t.str()}};
  r.verified = finite_suborder_check(s, t, 4);
  return r;
}

Report fraisse(const Options& o) {
  if (o.args.empty()) throw Error(ErrorCode::Parse, "expected at least one order term");
  std::vector<OrderTerm> orders;
  for (const auto& a : o.args) orders.push_back(parse_order_term(a));
  auto pair = fraisse_pair(orders);
  if (!pair) return none();
  Report r;
  r.witness = Json::array({pair->first, pair->second});
  r.verified = pair->first < pair->second && embeds(orders[pair->first], orders[pair->second]);
  return r;
}

// The array named by --file, or a random uniform one of the given depth
// drawn from --seed.
StabilizingArray load_array(const Options& o, std::uint32_t default_colors) {
  if (!o.file.empty()) return read_array_file(o.file);
  const std::uint32_t colors = o.colors ? o.colors : default_colors;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Color> pick(0, colors - 1);
  return StabilizingArray::uniform(o.window, o.depth, colors, [&](const FinSet&) { return pick(rng); });
}

Report good_pair(const Options& o) {
  need_args(o, 0, "no positional arguments");
  const StabilizingArray a = load_array(o, 2);
  const std::uint32_t q = o.colors ? o.colors : a.colors();
  Report r;
  if (q == 3) {
    const Extraction x = three_antichain_good_pair(a, o.jobs);
    static const char* exits[] = {"homogeneous", "adjacent-pair", "root-tail"};
    r.witness = Json{{"set", x.witness.str()},
                     {"value", x.value},
                     {"exit", exits[static_cast<int>(x.exit)]},
                     {"z", x.z.str()},
                     {"root", x.root.str()}};
    r.verified = fbar(a, x.witness) == fbar(a, x.witness.drop_min());
    return r;
  }
  const auto hit = good_pair_search(a, QuasiOrder::antichain(q), o.jobs);
  if (!hit) return none();
  r.witness = Json{{"set", hit->str()}, {"value", fbar(a, *hit)}};
  r.verified = fbar(a, *hit) == fbar(a, hit->drop_min());
  return r;
}

Report ramsey(const Options& o) {
  need_args(o, 0, "no positional arguments");
  const StabilizingArray a = load_array(o, 2);
  const auto h = cofinite_homogeneous_search(a, o.target, o.jobs);
  if (!h) return none();
  Report r;
  r.witness = Json{{"set", h->set.str()}, {"color", h->color}};
  r.verified = verify_homogeneous(a, h->set, a.depth());
  return r;
}

Report verify_array(const Options& o) {
  need_args(o, 0, "no positional arguments");
  if (o.file.empty()) throw Error(ErrorCode::InvalidArray, "verify-array needs --file");
  const StabilizingArray a = read_array_file(o.file);
  a.validate();
  Report r;
  r.witness = Json{{"window", a.window()},     {"depth", a.depth()},         {"guard", a.guard()},
                   {"colors", a.colors()},     {"uniform", a.is_uniform()}, {"limit_depth", a.limit_depth()},
                   {"entries", a.entries().size()}};
  r.verified = true;
  return r;
}

using Handler = Report (*)(const Options&);

int exit_code(const std::string& status, ErrorCode code) {
  if (status == "found") return 0;
  if (status == "none") return 1;
  return code == ErrorCode::WindowExhausted ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal notations, Ramsey-type searches and linear order embeddings"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Handler run;
  };
  const std::vector<Command> commands{
      {"compare-omega", "compare two terms of w(X)", compare_omega},
      {"compare-theta", "compare two terms of theta(eps_{W+X})", compare_theta},
      {"enumerate-omega", "first --budget terms of w(fin:n)", enumerate_omega},
      {"descend", "descending chain: omega | theta | base", descend},
      {"embed", "does the first order embed into the second", embed},
      {"fraisse", "least i < j with L_i embedding into L_j", fraisse},
      {"good-pair", "good pair for an array into the --colors antichain", good_pair},
      {"ramsey", "homogeneous set of size --target for a uniform 2-colouring", ramsey},
      {"verify-array", "check an array file and its stabilization certificate", verify_array},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("args", o.args, "terms or mode");
    sub->add_option("--base", o.base, "base order: fin:n, omega, omega*, lex(X,Y)");
    sub->add_option("--window", o.window, "window size of a random array");
    sub->add_option("--depth", o.depth, "depth of a random array");
    sub->add_option("--guard", o.guard, "stabilization guard");
    sub->add_option("--colors", o.colors, "size of the antichain / number of colours");
    sub->add_option("--budget", o.budget, "chain length or term count");
    sub->add_option("--target", o.target, "size of the homogeneous set");
    sub->add_option("--seed", o.seed, "seed of a random array");
    sub->add_option("--jobs", o.jobs, "worker threads for searches")->check(CLI::Range(1u, 256u));
    sub->add_option("--file", o.file, "array file");
    sub->add_flag("--timing", o.timing, "report elapsed_ms");
    subs.emplace_back(sub, c.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    Json rec;
    rec["command"] = argc > 1 ? argv[1] : "";
    rec["digest"] = nullptr;
    rec["status"] = "error";
    rec["code"] = "Usage";
    rec["witness"] = nullptr;
    rec["verified"] = false;
    rec["elapsed_ms"] = "-";
    rec["message"] = e.what();
    std::cout << rec.dump() << '\n';
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Handler run = nullptr;
  for (const auto& [sub, handler] : subs)
    if (sub == chosen) run = handler;

  // The digest covers everything that determines the answer: --jobs and
  // --timing are excluded so that output does not depend on them.
  std::string canonical = chosen->get_name();
  for (const auto& a : o.args) canonical += '\x1f' + a;
  canonical += "\x1e" + o.base + '\x1f' + std::to_string(o.window) + '\x1f' + std::to_string(o.depth) + '\x1f' +
               std::to_string(o.guard) + '\x1f' + std::to_string(o.colors) + '\x1f' + std::to_string(o.budget) +
               '\x1f' + std::to_string(o.target) + '\x1f' + std::to_string(o.seed);

  Json rec;
  rec["command"] = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  std::string status;
  ErrorCode code = ErrorCode::Parse;
  auto fail = [&](const std::string& name, const std::string& message) {
    status = "error";
    if (!rec.contains("digest")) rec["digest"] = fnv1a(canonical);
    rec["status"] = status;
    rec["code"] = name;
    rec["witness"] = nullptr;
    rec["verified"] = false;
    rec["message"] = message;
  };
  try {
    if (!o.file.empty()) canonical += "\x1e" + slurp(o.file);
    rec["digest"] = fnv1a(canonical);
    Report r = run(o);
    status = r.status;
    rec["status"] = r.status;
    rec["code"] = nullptr;
    rec["witness"] = std::move(r.witness);
    rec["verified"] = r.verified;
  } catch (const Error& e) {
    code = e.code();
    fail(std::string(to_string(e.code())), e.what());
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
      rec["position"] = p->position();
      rec["expected"] = p->expected();
    }
  } catch (const std::exception& e) {
    fail("Internal", e.what());
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.timing) {
    rec["elapsed_ms"] = static_cast<std::int64_t>(elapsed);
  } else {
    rec["elapsed_ms"] = "-";
  }
  // Keep the documented field order with the optional error details last.
  Json out;
  for (const char* key : {"command", "digest", "status", "code", "witness", "verified", "elapsed_ms"}) out[key] = rec[key];
  for (const char* key : {"message", "position", "expected"})
    if (rec.contains(key)) out[key] = rec[key];
  std::cout << out.dump() << '\n';
  return exit_code(status, code);
}
