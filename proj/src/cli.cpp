#include "maxgenus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "maxgenus/classifier.hpp"
#include "maxgenus/construction_catalog.hpp"
#include "maxgenus/extremal_bounds.hpp"
#include "maxgenus/report_io.hpp"
#include "maxgenus/scroll_geometry.hpp"

namespace maxgenus::cli {
namespace {

using io::Json;
using scroll::ScrollType;

struct Options {
  std::string d;
  long s = 0;
  std::string scroll = "s111";
  std::string cls;
  std::string d1;
  std::string d2;
  std::string d3 = "H";
  long s_min = 9;
  long s_max = 60;
  std::string m_spec = "w+2..w+6,10,50";
  std::string format;  // empty: the verb's default
  std::string out_file;
  unsigned threads = 0;
  bool force = false;
};

Integer parse_integer(const std::string& text, const char* what) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw ParseError(std::string("cannot parse ") + what + " '" + text + "' as an integer");
  }
  return z;
}

bool is_resolved(const std::string& text) { return text.find('~') != std::string::npos; }

// On S(0,0,3) classes are given either as Weil classes ("4R", "H+R") or as proper transforms ("2H~+R~").
scroll::ResolvedClass s003_proper(const std::string& text) {
  if (is_resolved(text)) return scroll::parse_resolved(text);
  return scroll::canonicalize_s003(scroll::parse_divisor(text));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string bound_text(const bounds::ExtremalParams& p, const Integer& genus, bool outside) {
  std::ostringstream o;
  o << "d=" << p.d.get_str() << " s=" << p.s << "\n";
  o << "m=" << p.m.get_str() << " epsilon=" << p.eps << " w=" << p.w << " v=" << p.v << " k=" << p.k
    << " delta=" << p.delta << " e=" << p.e << "\n";
  o << "G=" << genus.get_str() << "\n";
  o << "residual_degree=" << p.residual_degree() << "\n";
  o << "admissibility_threshold=" << bounds::admissibility_threshold(p.s).get_str() << "\n";
  if (outside) o << "outside-theorem-range\n";
  return o.str();
}

std::string cmd_bound(const Options& o) {
  const Integer d = parse_integer(o.d, "--d");
  const bounds::ExtremalParams p = bounds::decompose(d, o.s);
  const bounds::DeltaHProfile profile = bounds::delta_h(p);
  const Integer genus = bounds::genus_from_profile(profile);
  const bool outside = !bounds::admissible(d, o.s);
  if (o.format != "json") return bound_text(p, genus, outside);
  Json j{{"params", io::params_json(p)}, {"genus", io::integer_json(genus)}};
  if (profile.last_index() < 100000) j["delta_h"] = io::profile_json(profile);
  j["closed_form_G"] = to_string(bounds::closed_form_G(p));
  j["residual_degree"] = p.residual_degree();
  j["admissibility_threshold"] = io::integer_json(bounds::admissibility_threshold(o.s));
  j["outside_theorem_range"] = outside;
  return dump(j);
}

std::string cmd_classify(const Options& o) {
  const Integer d = parse_integer(o.d, "--d");
  const ScrollType type = scroll::parse_scroll(o.scroll);
  classify::ClassifyOptions options;
  options.allow_small_s = o.force;
  if (!o.cls.empty() && o.cls != "auto") {
    const classify::SurfaceClassOfS s_class{scroll::parse_divisor(o.cls)};
    return dump(io::report_json(classify::classify(d, o.s, type, s_class, options)));
  }
  const auto reports = classify::classify_all_classes(d, o.s, type, options);
  if (reports.size() == 1) return dump(io::report_json(reports.front()));
  Json all = Json::array();
  for (const auto& r : reports) all.push_back(io::report_json(r));
  return dump(all);
}

std::string cmd_h0(const Options& o) {
  const ScrollType type = scroll::parse_scroll(o.scroll);
  return scroll::h0_weil(type, scroll::parse_divisor(o.cls)).get_str() + "\n";
}

std::string cmd_intersect(const Options& o) {
  const ScrollType type = scroll::parse_scroll(o.scroll);
  if (type == ScrollType::S003) {
    if (scroll::parse_divisor(o.d3) != scroll::DivisorClass::hyperplane()) {
      throw ParameterError("intersect: on S003 only D1.D2.H is available");
    }
    return scroll::intersection_degree_s003(s003_proper(o.d1), s003_proper(o.d2)).get_str() + "\n";
  }
  if (is_resolved(o.d1) || is_resolved(o.d2) || is_resolved(o.d3)) {
    return scroll::triple_product(scroll::parse_resolved(o.d1), scroll::parse_resolved(o.d2),
                                  scroll::parse_resolved(o.d3))
               .get_str() +
           "\n";
  }
  return scroll::triple_product(type, scroll::parse_divisor(o.d1), scroll::parse_divisor(o.d2),
                                scroll::parse_divisor(o.d3))
             .get_str() +
         "\n";
}

std::string cmd_multiplicity(const Options& o) {
  return scroll::multiplicity_along_l(s003_proper(o.d1), s003_proper(o.d2)).get_str() + "\n";
}

std::string cmd_construct(const Options& o) {
  const Integer d = parse_integer(o.d, "--d");
  const bounds::ExtremalParams p = bounds::decompose(d, o.s);
  std::optional<scroll::DivisorClass> cls;
  if (!o.cls.empty()) cls = scroll::parse_divisor(o.cls);
  return dump(io::recipe_json(catalog::recipe_for(p, cls), p));
}

std::string grid_format(const Options& o, const char* fallback) {
  const std::string f = o.format.empty() ? fallback : o.format;
  if (f != "json" && f != "csv") throw ParseError("--format must be json or csv");
  return f;
}

std::string cmd_verify(const Options& o, bool& failed) {
  const std::string format = grid_format(o, "json");
  const auto cells = bounds::grid_cells(o.s_min, o.s_max, bounds::MSpec::parse(o.m_spec));
  const catalog::VerifyReport report = catalog::verify_cells(cells, o.threads);
  failed = !report.ok();
  if (format == "csv") return io::verify_csv(report);
  Json j = io::verify_json(report);
  j["discrepancy"] = io::discrepancy_json(bounds::compare_closed_forms(cells));
  return dump(j);
}

std::string cmd_sweep(const Options& o) {
  const std::string format = grid_format(o, "csv");
  const auto cells = bounds::grid_cells(o.s_min, o.s_max, bounds::MSpec::parse(o.m_spec));
  if (cells.empty()) throw ParameterError("sweep: the range contains no cells");
  const catalog::VerifyReport report = catalog::verify_cells(cells, o.threads);
  if (format == "csv") return io::sweep_csv(report);
  return dump(io::sweep_json(report));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maximal genus of space curves in P^5 on rational normal 3-folds", "maxgenus"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--out", o.out_file, "write output to FILE instead of stdout");

  auto add_ds = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "degree of the curve")->required();
    sub->add_option("--s", o.s, "degree of the minimal surface")->required();
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--s-min", o.s_min, "smallest s")->capture_default_str();
    sub->add_option("--s-max", o.s_max, "largest s")->capture_default_str();
    sub->add_option("--m", o.m_spec, "m values, e.g. 10, w+5, w+2..w+6")->capture_default_str();
    sub->add_option("--format", o.format, "csv or json");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };

  auto* bound = app.add_subcommand("bound", "decomposition, Delta h and G(d,5,s)");
  add_ds(bound);
  bound->add_option("--format", o.format, "text (default) or json")->check(CLI::IsMember({"json", "text"}));
  bound->add_flag("--force", o.force, "accepted for symmetry; bound always runs");

  auto* cls = app.add_subcommand("classify", "shape of C' for an extremal curve");
  add_ds(cls);
  cls->add_option("--scroll", o.scroll, "s111, s012 or s003")->required();
  cls->add_option("--class", o.cls, "class of S on X, e.g. 4H+R; auto (default) reports every class");
  cls->add_flag("--force", o.force, "allow 4 <= s <= 8 (coarse output with a warning)");

  auto* h0 = app.add_subcommand("h0", "h^0 of a Weil divisor class");
  h0->add_option("--scroll", o.scroll, "s111, s012 or s003")->required();
  h0->add_option("--class", o.cls, "class aH+bR")->required();

  auto* inter = app.add_subcommand("intersect", "intersection number D1.D2.D3 (default D3 = H)");
  inter->add_option("--scroll", o.scroll, "s111, s012 or s003")->required();
  inter->add_option("--d1", o.d1)->required();
  inter->add_option("--d2", o.d2)->required();
  inter->add_option("--d3", o.d3)->capture_default_str();

  auto* mult = app.add_subcommand("multiplicity", "intersection multiplicity along the singular line of S003");
  mult->add_option("--d1", o.d1, "proper transform aH~+bR~ or Weil class")->required();
  mult->add_option("--d2", o.d2, "proper transform aH~+bR~ or Weil class")->required();

  auto* construct = app.add_subcommand("construct", "existence recipe and its liaison check");
  add_ds(construct);
  construct->add_option("--class", o.cls, "class of S on X");

  auto* verify = app.add_subcommand("verify", "liaison and adjunction checks over a grid, plus the discrepancy report");
  add_grid(verify);

  auto* sweep = app.add_subcommand("sweep", "one row per (s, epsilon, m)");
  add_grid(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bool failed = false;
  std::string text;
  try {
    if (*bound) text = cmd_bound(o);
    else if (*cls) text = cmd_classify(o);
    else if (*h0) text = cmd_h0(o);
    else if (*inter) text = cmd_intersect(o);
    else if (*mult) text = cmd_multiplicity(o);
    else if (*construct) text = cmd_construct(o);
    else if (*verify) text = cmd_verify(o, failed);
    else if (*sweep) text = cmd_sweep(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitVerifyFailed;
  }

  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_file << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace maxgenus::cli
