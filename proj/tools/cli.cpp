#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "incseq/acceptance.hpp"
#include "incseq/geometry.hpp"
#include "incseq/groebner.hpp"
#include "incseq/interpolation.hpp"
#include "incseq/oracle.hpp"

namespace incseq::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::optional<int> n;
  std::optional<int> q;
  std::string field;
  std::string embedding;
  std::string order = "deglex";
  std::string format = "text";
  std::uint64_t seed = 1;
};

struct Options {
  std::string kind = "full";
  std::string downset_file;
  bool minimal = false;
  std::optional<int> s;
  std::string point;
  bool factored = false;
  std::string values_file;
  std::string in_file;
  std::optional<int> threshold;
  bool verify = false;
  bool bound = false;
  std::vector<std::string> excludes;
  std::vector<std::string> hyperplanes;
  std::string points_file;
  std::string builtin;
  std::optional<int> maxdeg;
  std::string poly;
  int max_n = 4;
  int max_q = 4;
};

/// Owns the CLI11 app and the variables it writes into.
struct Parser {
  Globals g;
  Options o;
  CLI::App app{"Groebner bases, interpolation and Kakeya-type sets for increasing sequences", "incseq"};

  Parser() {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--n", g.n, "Number of variables")->check(CLI::PositiveNumber);
    app.add_option("--q", g.q, "Sequences take values in [q]")->check(CLI::PositiveNumber);
    app.add_option("--field", g.field, "gf:p, gf:p^k, gf:p^k:c0,..,ck or rational");
    app.add_option("--embedding", g.embedding, "grid:<a> or list:<e1>,...,<eq>");
    app.add_option("--order", g.order, "Term order")->check(CLI::IsMember({"lex", "deglex"}));
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    auto kind = [&](CLI::App* sub, std::vector<std::string> kinds) {
      sub->add_option("--kind", o.kind, "Point set")->check(CLI::IsMember(std::move(kinds)));
    };

    auto* gb = app.add_subcommand("gb", "Closed-form Groebner basis");
    kind(gb, {"full", "strict", "downset"});
    gb->add_option("--downset-file", o.downset_file, "Downset, one sequence per line");
    gb->add_flag("--minimal", o.minimal, "Drop downset members with redundant leading monomials");

    auto* sm = app.add_subcommand("sm", "Closed-form standard monomials");
    kind(sm, {"full", "strict", "downset"});
    sm->add_option("--downset-file", o.downset_file, "Downset, one sequence per line");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function");
    kind(hilbert, {"full", "strict"});
    hilbert->add_option("--s", o.s, "Degree bound (default: the whole range)")->check(CLI::NonNegativeNumber);

    auto* interp = app.add_subcommand("interp", "Interpolation basis element or interpolant");
    interp->add_option("--point", o.point, "Sequence s, e.g. 1,2,2,4,4");
    interp->add_flag("--factored", o.factored, "Also print the factored form (grid embeddings)");
    interp->add_option("--values", o.values_file, "CSV rows: sequence entries, then the value");

    auto* kakeya = app.add_subcommand("kakeya", "Increasing Kakeya sets");
    kakeya->require_subcommand(1);
    kakeya->add_subcommand("build-t", "Union of lines through 0 in the increasing directions");
    auto* paper = kakeya->add_subcommand("paper-example", "The 10-point increasing Kakeya set of F_3^3");
    paper->add_flag("--verify", o.verify, "Verify it and check the lower bound");
    auto* kverify = kakeya->add_subcommand("verify", "Verify a point set");
    kverify->add_option("--in", o.in_file, "Point file")->required();
    kverify->add_option("--threshold", o.threshold, "Points each line must share with the set (default q)");
    kverify->add_flag("--bound", o.bound, "Also run the polynomial-method lower bound");
    kakeya->add_subcommand("search", "Smallest increasing Kakeya set made of one line per direction");

    auto* nikodym = app.add_subcommand("nikodym", "Increasing Nikodym sets");
    nikodym->require_subcommand(1);
    auto* nverify = nikodym->add_subcommand("verify", "Verify a point set");
    nverify->add_option("--in", o.in_file, "Point file")->required();
    nverify->add_flag("--bound", o.bound, "Also run the polynomial-method lower bound");

    auto* cover = app.add_subcommand("cover", "Hyperplane covers of J(n,q)");
    cover->require_subcommand(1);
    auto* cverify = cover->add_subcommand("verify", "Check a family of hyperplanes");
    cverify->add_option("--in", o.in_file, "Hyperplane file, one `a1,...,an=b` per line");
    cverify->add_option("--hyperplane", o.hyperplanes, "Hyperplane a1,...,an=b");
    cverify->add_option("--exclude", o.excludes, "Sequence that need not be covered");
    auto* csearch = cover->add_subcommand("search", "Exact minimum cover");
    csearch->add_option("--exclude", o.excludes, "Sequence that need not be covered");

    auto* orc = app.add_subcommand("oracle", "Evaluation-matrix ground truth");
    orc->require_subcommand(1);
    for (const char* name : {"sm", "vanish"}) {
      auto* sub = orc->add_subcommand(name, std::string(name) == "sm" ? "Standard monomials of a point set"
                                                                      : "Low-degree vanishing polynomial");
      sub->add_option("--points", o.points_file, "Point file");
      sub->add_option("--builtin", o.builtin, "jnq:n,q or sjnq:n,q");
      if (std::string(name) == "vanish")
        sub->add_option("--maxdeg", o.maxdeg, "Degree bound")->required()->check(CLI::NonNegativeNumber);
    }

    auto* nonvanish = app.add_subcommand("nonvanish", "Point of J(n,q) or SJ(n,q) where a polynomial is nonzero");
    kind(nonvanish, {"full", "strict"});
    nonvanish->add_option("--poly", o.poly, "Polynomial, e.g. \"x1 - x2\"")->required();

    auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
    all->add_option("--max-n", o.max_n, "Largest n for the sweeps")->check(CLI::PositiveNumber);
    all->add_option("--max-q", o.max_q, "Largest q for the sweeps")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      for (auto* inner : sub->get_subcommands([](CLI::App*) { return true; })) inner->fallthrough();
    }
  }

  std::string command() const {
    std::string out;
    const CLI::App* cur = &app;
    while (true) {
      auto subs = cur->get_subcommands();
      if (subs.empty()) break;
      cur = subs.front();
      out += (out.empty() ? "" : " ") + cur->get_name();
    }
    return out;
  }
};

bool is_geometry(const std::string& command) {
  return command.rfind("kakeya", 0) == 0 || command.rfind("nikodym", 0) == 0 || command.rfind("cover", 0) == 0;
}

/// gf:p^k with p^k == q, or nullopt when q is not a prime power.
std::optional<std::string> field_of_order(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p) ++p;
  int k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return "gf:" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : "");
}

std::pair<int, int> parse_builtin(const std::string& text, bool& strict) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  if (colon == std::string::npos || (name != "jnq" && name != "sjnq"))
    throw UsageError("--builtin must be jnq:n,q or sjnq:n,q");
  strict = name == "sjnq";
  IncSeq nq;
  try {
    nq = parse_seq(text.substr(colon + 1));
  } catch (const Error&) {
    throw UsageError("--builtin must be jnq:n,q or sjnq:n,q");
  }
  if (nq.size() != 2 || nq[0] < 1 || nq[1] < 1) throw UsageError("--builtin must be jnq:n,q or sjnq:n,q");
  return {nq[0], nq[1]};
}

RunConfig make_config(const std::string& command, Globals g, const Options& o) {
  RunConfig c;
  c.command = command;
  if (command.rfind("oracle", 0) == 0 && !o.builtin.empty()) {
    bool strict = false;
    auto [n, q] = parse_builtin(o.builtin, strict);
    if ((g.n && *g.n != n) || (g.q && *g.q != q)) throw UsageError("--builtin disagrees with --n/--q");
    g.n = n;
    g.q = q;
  }
  c.n = g.n;
  c.q = g.q;
  c.order = parse_term_order(g.order);
  c.format = g.format == "json" ? Format::json : Format::text;
  c.seed = g.seed;

  std::optional<Field> field;
  try {
    if (!g.field.empty()) {
      field = Field::from_string(g.field);
    } else if (g.q) {
      if (is_geometry(command)) {
        const auto spec = field_of_order(*g.q);
        if (!spec) throw UsageError("q = " + std::to_string(*g.q) + " is not a prime power; pass --field");
        field = Field::from_string(*spec);
      } else {
        field = Field::make(FieldSpec::prime(smallest_prime_at_least(static_cast<std::uint32_t>(*g.q))));
      }
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (field) c.field = field->spec().to_string();

  if (!g.embedding.empty() && !g.q) throw UsageError("--embedding needs --q");
  if (g.q && field) {
    try {
      c.embedding = Embedding::parse(g.embedding, *field, *g.q).to_string();
    } catch (const Error& e) {
      throw UsageError(std::string("invalid embedding: ") + e.what());
    }
  }
  return c;
}

std::vector<std::string> reversed(std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  return args;
}

// ---------------------------------------------------------------------------
// Command helpers

struct Context {
  RunConfig cfg;
  std::optional<Field> field;
  std::optional<Embedding> emb;
  std::ostream& out;

  int n() const {
    if (!cfg.n) throw UsageError("--n is required");
    return *cfg.n;
  }
  int q() const {
    if (!cfg.q) throw UsageError("--q is required");
    return *cfg.q;
  }
  Field f() const {
    if (!field) throw UsageError("--field or --q is required");
    return *field;
  }
  const Embedding& embedding() const {
    if (!emb) throw UsageError("--q is required");
    return *emb;
  }
  bool json_out() const { return cfg.format == Format::json; }
  void emit(const json& j) const { out << j.dump(2) << "\n"; }

  /// q and embedding for commands that read a point set: q defaults to the
  /// field size.
  Embedding embedding_for_set() const {
    if (emb) return *emb;
    const auto size = f().size();
    if (!size) throw UsageError("--q is required over the rationals");
    return Embedding::standard(f(), static_cast<int>(*size));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::vector<IncSeq> read_downset(const Options& o) {
  if (o.downset_file.empty()) throw UsageError("--kind downset needs --downset-file");
  std::vector<IncSeq> out;
  for (const auto& line : content_lines(read_file(o.downset_file))) out.push_back(parse_seq(line));
  return out;
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps, TermOrder order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

std::vector<std::string> mono_strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

std::vector<std::string> point_strings(const std::vector<Point>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_point(p));
  return out;
}

void print_list(std::ostream& out, const std::string& title, const std::vector<std::string>& items) {
  out << title << " (" << items.size() << "):\n";
  for (const auto& s : items) out << "  " << s << "\n";
}

GroebnerBasis build_basis(const Context& c, const Options& o) {
  const int n = c.n(), q = c.q();
  switch (parse_ideal_kind(o.kind)) {
    case IdealKind::full:
      return gb_full(n, q, c.embedding(), c.cfg.order);
    case IdealKind::strict:
      return gb_strict(n, q, c.embedding(), c.cfg.order);
    case IdealKind::downset:
      break;
  }
  return gb_downset(n, q, read_downset(o), c.embedding(), c.cfg.order, o.minimal);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_gb(const Context& c, const Options& o) {
  if (o.minimal && o.kind != "downset") throw UsageError("--minimal applies to --kind downset only");
  const auto gb = build_basis(c, o);
  const auto basis = poly_strings(gb.polynomials(), c.cfg.order);
  const auto sm = mono_strings(gb.standard_monomials());
  if (c.json_out()) {
    c.emit({{"kind", o.kind},
            {"n", gb.n()},
            {"q", gb.q()},
            {"order", to_string(c.cfg.order)},
            {"basis", basis},
            {"standard_monomials", sm},
            {"counts", {{"basis", basis.size()}, {"sm", sm.size()}, {"points", gb.points().size()}}},
            {"reduced", gb.is_reduced()}});
    return 0;
  }
  c.out << "kind: " << o.kind << "\nn: " << gb.n() << "\nq: " << gb.q() << "\nfield: " << c.cfg.field
        << "\nembedding: " << c.cfg.embedding << "\norder: " << to_string(c.cfg.order) << "\n";
  print_list(c.out, "basis", basis);
  print_list(c.out, "standard monomials", sm);
  c.out << "points: " << gb.points().size() << "\nreduced: " << (gb.is_reduced() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_sm(const Context& c, const Options& o) {
  const auto gb = build_basis(c, o);
  const auto sm = mono_strings(gb.standard_monomials());
  if (c.json_out()) {
    c.emit({{"kind", o.kind},
            {"n", gb.n()},
            {"q", gb.q()},
            {"order", to_string(c.cfg.order)},
            {"standard_monomials", sm},
            {"count", sm.size()}});
    return 0;
  }
  print_list(c.out, "standard monomials", sm);
  return 0;
}

int cmd_hilbert(const Context& c, const Options& o) {
  const int n = c.n(), q = c.q();
  const auto kind = parse_ideal_kind(o.kind);
  if (kind == IdealKind::strict && q < n) throw UsageError("--kind strict needs q >= n");
  std::vector<int> degrees;
  if (o.s) {
    degrees.push_back(*o.s);
  } else {
    for (int s = 0; s <= (kind == IdealKind::full ? q - 1 : q - n); ++s) degrees.push_back(s);
  }
  json values = json::array();
  for (int s : degrees) {
    const auto h = hilbert(kind, n, q, s);
    if (c.json_out()) {
      values.push_back({{"s", s}, {"h", h.value}, {"in_range", h.in_range}});
    } else {
      c.out << "h(" << s << ") = " << h.value;
      if (h.in_range)
        c.out << " = C(" << n + s << "," << s << ")\n";
      else
        c.out << " (outside the closed-form range)\n";
    }
  }
  if (c.json_out()) c.emit({{"kind", o.kind}, {"n", n}, {"q", q}, {"values", values}});
  return 0;
}

int cmd_interp(const Context& c, const Options& o) {
  const int q = c.q();
  const Field field = c.f();
  if (!o.values_file.empty()) {
    if (!o.point.empty()) throw UsageError("--point and --values are exclusive");
    std::map<IncSeq, Element> values;
    std::optional<int> width = c.cfg.n;
    for (const auto& line : content_lines(read_file(o.values_file))) {
      const auto cut = line.rfind(',');
      if (cut == std::string::npos) throw UsageError("CSV row '" + line + "' has no value");
      IncSeq s = parse_seq(line.substr(0, cut));
      if (!width) width = static_cast<int>(s.size());
      if (static_cast<int>(s.size()) != *width) throw UsageError("CSV row '" + line + "' has the wrong width");
      values[s] = field.parse(line.substr(cut + 1));
    }
    if (!width) throw UsageError("no values given");
    const auto p = Interpolator(*width, q, c.embedding()).interpolate(values);
    if (c.json_out())
      c.emit({{"n", *width}, {"q", q}, {"polynomial", p.to_string(c.cfg.order)}, {"degree", p.degree()}});
    else
      c.out << "interpolant: " << p.to_string(c.cfg.order) << "\n";
    return 0;
  }
  if (o.point.empty()) throw UsageError("interp needs --point or --values");
  const IncSeq s = parse_seq(o.point);
  if (c.cfg.n && *c.cfg.n != static_cast<int>(s.size())) throw UsageError("--point does not have n entries");
  const auto e = interp_basis_element(s, static_cast<int>(s.size()), q, c.embedding());
  const std::string expanded = e.expanded.to_string(c.cfg.order);
  if (c.json_out()) {
    json j{{"s", s}, {"expanded", expanded}, {"degree", e.expanded.degree()}};
    if (o.factored) {
      if (e.factored) {
        json factors = json::array();
        for (const auto& f : e.factored->factors) factors.push_back(f.to_string());
        j["factored"] = {{"product", e.factored->product_string()},
                         {"scalar", e.factored->scalar.to_string()},
                         {"factors", factors}};
      } else {
        j["factored"] = nullptr;
      }
    }
    c.emit(j);
    return 0;
  }
  c.out << "s: " << format_seq(s) << "\nP_s: " << expanded << "\ndegree: " << e.expanded.degree() << "\n";
  if (o.factored) {
    if (e.factored)
      c.out << "Q: " << e.factored->product_string() << "\nscalar: " << e.factored->scalar.to_string() << "\n";
    else
      c.out << "factored: unavailable (the embedding is not a grid map)\n";
  }
  return 0;
}

json line_json(const LineWitness& w) {
  return {{"direction", format_point(w.direction)}, {"base", format_point(w.base)}, {"hits", w.hits}};
}

void print_kakeya(const Context& c, const KakeyaReport& r, int threshold, json& j) {
  if (c.json_out()) {
    json lines = json::array();
    for (const auto& w : r.witnesses) lines.push_back(line_json(w));
    j["kakeya"] = r.ok;
    j["threshold"] = threshold;
    j["witnesses"] = lines;
    if (r.failing_direction) j["failing_direction"] = format_point(*r.failing_direction);
    return;
  }
  for (const auto& w : r.witnesses)
    c.out << "direction " << format_point(w.direction) << ": base " << format_point(w.base) << ", " << w.hits
          << " hits\n";
  if (r.ok)
    c.out << "kakeya: yes (threshold " << threshold << ")\n";
  else
    c.out << "kakeya: no, no line in direction " << format_point(*r.failing_direction) << " meets the set in "
          << threshold << " points\n";
}

bool print_lower_bound(const Context& c, const LowerBoundReport& b, int n, int ell, json& j) {
  if (c.json_out()) {
    json k{{"bound", b.bound}, {"size", b.size}, {"status", to_string(b.status)}};
    if (b.vanishing) k["vanishing"] = b.vanishing->to_string(c.cfg.order);
    if (b.direction) {
      k["direction"] = format_point(*b.direction);
      k["max_hits"] = b.max_hits;
    }
    j["lower_bound"] = k;
  } else {
    c.out << "bound: C(" << n + ell << "," << n << ") = " << b.bound << ", size " << b.size << ", "
          << to_string(b.status) << "\n";
    if (b.vanishing) c.out << "vanishing polynomial: " << b.vanishing->to_string(c.cfg.order) << "\n";
    if (b.direction)
      c.out << "blocked direction: " << format_point(*b.direction) << " (at most " << b.max_hits
            << " points on a line)\n";
  }
  return b.status != BoundStatus::contradiction;
}

int cmd_build_t(const Context& c, const Options&) {
  const int n = c.n(), q = c.q();
  const PointSet t = build_T(n, q, c.embedding());
  if (c.json_out()) {
    c.emit({{"n", n}, {"q", q}, {"size", t.size()}, {"upper_bound", t_size_bound(n, q)}, {"points", point_strings(t.points())}});
    return 0;
  }
  c.out << "# T(" << n << "," << q << "): " << t.size() << " points, upper bound " << t_size_bound(n, q) << "\n"
        << t.to_text();
  return 0;
}

int cmd_paper_example(const Context& c, const Options& o) {
  const PointSet k = paper_kakeya_f3();
  json j{{"size", k.size()}, {"points", point_strings(k.points())}};
  if (!o.verify) {
    if (c.json_out())
      c.emit(j);
    else
      c.out << "# " << k.size() << " points\n" << k.to_text();
    return 0;
  }
  const auto emb = Embedding::standard(k.field(), 3);
  const auto report = verify_increasing_kakeya(k, emb, 3);
  if (!c.json_out()) c.out << "size: " << k.size() << "\n";
  print_kakeya(c, report, 3, j);
  const auto bound = lower_bound_check(k, embedded_points(3, 3, emb), 2);
  const bool chain = print_lower_bound(c, bound, 3, 2, j);
  if (c.json_out()) c.emit(j);
  return report.ok && chain && bound.status == BoundStatus::bound_met ? 0 : 1;
}

int cmd_kakeya_verify(const Context& c, const Options& o) {
  const PointSet k = PointSet::parse(read_file(o.in_file), c.f());
  if (c.cfg.n && *c.cfg.n != k.width()) throw UsageError("point file width differs from --n");
  const auto emb = c.embedding_for_set();
  const int q = emb.q();
  const int threshold = o.threshold.value_or(q);
  if (threshold < 1 || threshold > q) throw UsageError("--threshold must lie in [1, q]");
  json j{{"n", k.width()}, {"q", q}, {"size", k.size()}};
  const auto report = verify_increasing_kakeya(k, emb, threshold);
  print_kakeya(c, report, threshold, j);
  bool ok = report.ok;
  if (o.bound) {
    if (threshold < 2) throw UsageError("--bound needs --threshold >= 2");
    const auto b = lower_bound_check(k, embedded_points(k.width(), q, emb), threshold - 1, c.cfg.order);
    ok = print_lower_bound(c, b, k.width(), threshold - 1, j) && ok;
  }
  if (c.json_out()) c.emit(j);
  return ok ? 0 : 1;
}

int cmd_kakeya_search(const Context& c, const Options&) {
  const int n = c.n(), q = c.q();
  const auto r = search_min_increasing_kakeya(n, q, c.embedding());
  if (c.json_out()) {
    json lines = json::array();
    for (const auto& w : r.lines) lines.push_back(line_json(w));
    c.emit({{"n", n},
            {"q", q},
            {"minimum", r.minimum},
            {"lower_bound", binomial(static_cast<std::uint64_t>(q + n - 1), static_cast<std::uint64_t>(n))},
            {"lines", lines},
            {"points", point_strings(r.witness.points())},
            {"nodes", r.nodes}});
    return 0;
  }
  c.out << "minimum: " << r.minimum << " (lower bound C(" << q + n - 1 << "," << n
        << ") = " << binomial(static_cast<std::uint64_t>(q + n - 1), static_cast<std::uint64_t>(n)) << ")\n";
  for (const auto& w : r.lines)
    c.out << "line: base " << format_point(w.base) << ", direction " << format_point(w.direction) << "\n";
  c.out << "points:\n" << r.witness.to_text();
  return 0;
}

int cmd_nikodym_verify(const Context& c, const Options& o) {
  const PointSet b = PointSet::parse(read_file(o.in_file), c.f());
  if (c.cfg.n && *c.cfg.n != b.width()) throw UsageError("point file width differs from --n");
  const auto emb = c.embedding_for_set();
  const auto report = verify_nikodym(b, emb);
  json j{{"n", b.width()}, {"q", emb.q()}, {"size", b.size()}, {"nikodym", report.ok}};
  if (c.json_out()) {
    json ws = json::array();
    for (const auto& w : report.witnesses)
      ws.push_back({{"point", format_point(w.z)}, {"direction", format_point(w.direction)}});
    j["witnesses"] = ws;
    if (report.failing_point) j["failing_point"] = format_point(*report.failing_point);
  } else {
    for (const auto& w : report.witnesses)
      c.out << "point " << format_point(w.z) << ": direction " << format_point(w.direction) << "\n";
    if (report.ok)
      c.out << "nikodym: yes\n";
    else
      c.out << "nikodym: no, every punctured line through " << format_point(*report.failing_point)
            << " leaves the set\n";
  }
  bool ok = report.ok;
  if (o.bound && report.ok) {
    const auto r = nikodym_bound_check(b, emb);
    if (c.json_out()) {
      j["lower_bound"] = {{"bound", r.bound}, {"size", r.size}, {"status", to_string(r.status)}};
    } else {
      c.out << "bound: C(" << b.width() + emb.q() - 2 << "," << b.width() << ") = " << r.bound << ", size "
            << r.size << ", " << to_string(r.status) << "\n";
    }
    ok = r.status == BoundStatus::bound_met;
  }
  if (c.json_out()) c.emit(j);
  return ok ? 0 : 1;
}

std::vector<IncSeq> excluded(const Options& o) {
  std::vector<IncSeq> out;
  for (const auto& e : o.excludes) out.push_back(parse_seq(e));
  return out;
}

int cmd_cover_verify(const Context& c, const Options& o) {
  const int q = c.q();
  std::vector<Hyperplane> hs;
  if (!o.in_file.empty())
    for (const auto& line : content_lines(read_file(o.in_file))) hs.push_back(Hyperplane::parse(line, c.f()));
  for (const auto& h : o.hyperplanes) hs.push_back(Hyperplane::parse(h, c.f()));
  if (hs.empty()) throw UsageError("cover verify needs --in or --hyperplane");
  const int n = c.cfg.n.value_or(static_cast<int>(hs.front().normal.size()));
  const auto r = cover_verify(hs, n, q, c.embedding(), excluded(o));
  if (c.json_out()) {
    json j{{"n", n},
           {"q", q},
           {"covered", r.covered},
           {"hyperplanes", r.hyperplanes},
           {"required_points", r.required_points},
           {"bound", r.bound},
           {"bound_respected", r.bound_respected}};
    if (r.uncovered) j["uncovered"] = format_point(*r.uncovered);
    c.emit(j);
  } else {
    if (r.covered)
      c.out << "covered: yes (" << r.hyperplanes << " hyperplanes, " << r.required_points << " points)\n"
            << "bound: at least " << r.bound << " hyperplanes, " << (r.bound_respected ? "respected" : "violated")
            << "\n";
    else
      c.out << "covered: no, " << format_point(*r.uncovered) << " lies on none of the hyperplanes\n";
  }
  return r.covered && r.bound_respected ? 0 : 1;
}

int cmd_cover_search(const Context& c, const Options& o) {
  const int n = c.n(), q = c.q();
  const auto ex = excluded(o);
  const auto r = cover_search(n, q, c.embedding(), ex);
  std::vector<std::string> witness;
  for (const auto& h : r.witness) witness.push_back(h.to_string());
  if (c.json_out()) {
    c.emit({{"n", n},
            {"q", q},
            {"excluded", ex.size()},
            {"minimum", r.minimum},
            {"greedy", r.greedy},
            {"witness", witness},
            {"nodes", r.nodes}});
    return 0;
  }
  c.out << "minimum: " << r.minimum << "\ngreedy: " << r.greedy << "\n";
  print_list(c.out, "witness", witness);
  return 0;
}

std::vector<Point> oracle_points(const Context& c, const Options& o, int& n) {
  if (!o.points_file.empty() && !o.builtin.empty()) throw UsageError("--points and --builtin are exclusive");
  if (!o.builtin.empty()) {
    bool strict = false;
    parse_builtin(o.builtin, strict);
    n = c.n();
    return embedded_points(n, c.q(), c.embedding(), strict);
  }
  if (o.points_file.empty()) throw UsageError("oracle needs --points or --builtin");
  const PointSet ps = PointSet::parse(read_file(o.points_file), c.f());
  n = c.cfg.n.value_or(ps.width());
  if (ps.empty()) {
    if (!c.cfg.n) throw UsageError("an empty point file needs --n");
  } else if (n != ps.width()) {
    throw UsageError("point file width differs from --n");
  }
  return ps.points();
}

int cmd_oracle_sm(const Context& c, const Options& o) {
  int n = 0;
  const auto pts = oracle_points(c, o, n);
  const auto sm = mono_strings(oracle::standard_monomials(pts, c.cfg.order));
  if (c.json_out()) {
    c.emit({{"n", n}, {"order", to_string(c.cfg.order)}, {"points", pts.size()}, {"standard_monomials", sm}, {"count", sm.size()}});
    return 0;
  }
  print_list(c.out, "standard monomials", sm);
  return 0;
}

int cmd_oracle_vanish(const Context& c, const Options& o) {
  int n = 0;
  const auto pts = oracle_points(c, o, n);
  const auto p = oracle::vanishing_polynomial(pts, *o.maxdeg, c.f(), n);
  if (c.json_out()) {
    c.emit({{"n", n},
            {"points", pts.size()},
            {"max_degree", *o.maxdeg},
            {"polynomial", p ? json(p->to_string(c.cfg.order)) : json(nullptr)}});
    return 0;
  }
  c.out << (p ? p->to_string(c.cfg.order) : std::string("none")) << "\n";
  return 0;
}

int cmd_nonvanish(const Context& c, const Options& o) {
  const int n = c.n(), q = c.q();
  const auto kind = parse_ideal_kind(o.kind);
  const Polynomial f = Polynomial::parse(o.poly, c.f(), n);
  const auto w = nonvanishing_point(f, kind, n, q, c.embedding());
  if (c.json_out()) {
    json j{{"polynomial", f.to_string(c.cfg.order)}, {"zero", !w}};
    if (w) {
      j["witness"] = format_point(*w);
      j["sequence"] = format_seq(*c.embedding().preimage(*w));
      j["value"] = f.eval(*w).to_string();
    }
    c.emit(j);
    return 0;
  }
  if (!w)
    c.out << "zero polynomial\n";
  else
    c.out << "witness: " << format_point(*w) << " (sequence " << format_seq(*c.embedding().preimage(*w))
          << "), value " << f.eval(*w).to_string() << "\n";
  return 0;
}

int cmd_verify_all(const Context& c, const Options& o) {
  const auto results = acceptance::run_all({o.max_n, o.max_q, c.cfg.seed});
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (c.json_out()) {
    json list = json::array();
    for (const auto& r : results)
      list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    c.emit({{"criteria", list}, {"passed", ok}});
  } else {
    for (const auto& r : results) c.out << acceptance::format(r) << "\n";
    c.out << std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }) << "/"
          << results.size() << " criteria passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

std::string RunConfig::canonical() const {
  std::string s = command;
  if (n) s += " --n " + std::to_string(*n);
  if (q) s += " --q " + std::to_string(*q);
  if (!field.empty()) s += " --field " + field;
  if (!embedding.empty()) s += " --embedding " + embedding;
  s += " --order " + to_string(order);
  s += std::string(" --format ") + (format == Format::json ? "json" : "text");
  s += " --seed " + std::to_string(seed);
  return s;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  Parser p;
  try {
    p.app.parse(reversed(args));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return make_config(p.command(), p.g, p.o);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parser p;
  try {
    p.app.parse(reversed(args));
  } catch (const CLI::CallForHelp&) {
    out << p.app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const std::string command = p.command();
    Context c{make_config(command, p.g, p.o), std::nullopt, std::nullopt, out};
    if (!c.cfg.field.empty()) c.field = Field::from_string(c.cfg.field);
    if (!c.cfg.embedding.empty()) c.emb = Embedding::parse(c.cfg.embedding, *c.field, *c.cfg.q);

    if (command == "gb") return cmd_gb(c, p.o);
    if (command == "sm") return cmd_sm(c, p.o);
    if (command == "hilbert") return cmd_hilbert(c, p.o);
    if (command == "interp") return cmd_interp(c, p.o);
    if (command == "kakeya build-t") return cmd_build_t(c, p.o);
    if (command == "kakeya paper-example") return cmd_paper_example(c, p.o);
    if (command == "kakeya verify") return cmd_kakeya_verify(c, p.o);
    if (command == "kakeya search") return cmd_kakeya_search(c, p.o);
    if (command == "nikodym verify") return cmd_nikodym_verify(c, p.o);
    if (command == "cover verify") return cmd_cover_verify(c, p.o);
    if (command == "cover search") return cmd_cover_search(c, p.o);
    if (command == "oracle sm") return cmd_oracle_sm(c, p.o);
    if (command == "oracle vanish") return cmd_oracle_vanish(c, p.o);
    if (command == "nonvanish") return cmd_nonvanish(c, p.o);
    if (command == "verify-all") return cmd_verify_all(c, p.o);
    throw UsageError("unknown command '" + command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace incseq::cli
