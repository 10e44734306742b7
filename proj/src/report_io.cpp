#include "maxgenus/report_io.hpp"

#include <sstream>

namespace maxgenus::io {

Json integer_json(const Integer& z) {
  if (fits_int64(z)) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Json params_json(const bounds::ExtremalParams& p) {
  return Json{{"d", integer_json(p.d)}, {"s", p.s},         {"m", integer_json(p.m)},
              {"epsilon", p.eps},       {"w", p.w},         {"v", p.v},
              {"k", p.k},               {"delta", p.delta}, {"e", p.e}};
}

Json profile_json(const bounds::DeltaHProfile& profile) {
  Json out = Json::array();
  for (long x : profile.values()) out.push_back(x);
  return out;
}

namespace {

Json optional_integer(const std::optional<Integer>& z) { return z ? integer_json(*z) : Json(nullptr); }

Json component_json(const classify::FineComponent& c) {
  Json j{{"label", c.label}, {"degree", integer_json(c.degree)}, {"support", c.support}};
  if (c.quadric_type) {
    j["quadric_type"] = Json::array({integer_json(c.quadric_type->first), integer_json(c.quadric_type->second)});
  }
  if (!c.vertex.empty()) j["vertex"] = c.vertex;
  if (c.line_multiplicity) j["line_multiplicity"] = integer_json(*c.line_multiplicity);
  return j;
}

Json fine_json(const classify::FineCase& fine) {
  Json options = Json::array();
  for (const auto& o : fine.options) {
    Json comps = Json::array();
    for (const auto& c : o.components) comps.push_back(component_json(c));
    Json j{{"id", o.id}, {"surface", o.surface}};
    if (o.proper_transform_of_s) j["proper_transform_of_s"] = scroll::format(*o.proper_transform_of_s);
    j["components"] = std::move(comps);
    j["intersections"] = o.intersections;
    j["constraints"] = o.constraints;
    options.push_back(std::move(j));
  }
  return Json{{"family", fine.family}, {"options", std::move(options)}};
}

std::string csv_integer(const std::optional<Integer>& z) { return z ? z->get_str() : std::string(); }

}  // namespace

Json report_json(const classify::ClassificationReport& r) {
  Json j{{"params", params_json(r.params)},
         {"scroll", std::string(scroll::name(r.scroll))},
         {"surface_class", scroll::format(r.s_class.cls)},
         {"k", r.case_k},
         {"residual_degree", integer_json(r.residual_degree)},
         {"coarse", std::string(classify::name(r.coarse))}};
  if (r.fine) j["fine"] = fine_json(*r.fine);
  j["nonexistent"] = r.nonexistent;
  j["outside_theorem_range"] = r.outside_theorem_range;
  j["notes"] = r.notes;
  return j;
}

Json recipe_json(const catalog::Recipe& recipe, const bounds::ExtremalParams& p) {
  auto curve_json = [](const linkage::LinkedCurveData& c) {
    Json comps = Json::array();
    for (const auto& x : c.components) {
      comps.push_back(Json{{"label", x.label}, {"degree", integer_json(x.degree)}, {"genus", integer_json(x.genus)}});
    }
    Json nodes = Json::array();
    for (const auto& n : c.nodes) {
      nodes.push_back(Json{{"between", Json::array({c.components[n.first].label, c.components[n.second].label})},
                           {"count", integer_json(n.count)},
                           {"where", n.where}});
    }
    return Json{{"components", std::move(comps)},
                {"nodes", std::move(nodes)},
                {"degree", integer_json(c.degree())},
                {"genus", integer_json(c.genus())},
                {"connected", c.connected()},
                {"r_intersection", integer_json(c.r_intersection)}};
  };
  Json j{{"params", params_json(p)},
         {"k", recipe.k},
         {"v", recipe.v},
         {"required_scroll", std::string(scroll::name(recipe.required_scroll))},
         {"seed_degree", optional_integer(recipe.seed_degree)},
         {"surface_class", scroll::format(recipe.s_class.cls)},
         {"c_double_prime", curve_json(recipe.cpp)},
         {"genus_Y", integer_json(scroll::ci_curve_genus(p.m + 1, Integer(p.w + 1)))},
         {"expected_genus", integer_json(catalog::expected_genus(recipe, p))},
         {"genus_profile", integer_json(bounds::genus_from_profile(bounds::delta_h(p)))},
         {"flags", recipe.flags},
         {"annotations", recipe.annotations}};
  if (recipe.printed_reading) {
    catalog::Recipe alt = recipe;
    alt.cpp = *recipe.printed_reading;
    j["printed_reading"] = Json{{"c_double_prime", curve_json(alt.cpp)},
                                {"expected_genus", integer_json(catalog::expected_genus(alt, p))}};
  }
  return j;
}

Json discrepancy_json(const bounds::DiscrepancyReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.closed_form) {
    const Rational diff = c.printed - Rational(c.summed);
    cells.push_back(Json{{"s", c.cell.s},
                         {"epsilon", c.cell.eps},
                         {"m", c.cell.m},
                         {"d", integer_json(c.params.d)},
                         {"k", c.params.k},
                         {"v", c.params.v},
                         {"e", c.params.e},
                         {"printed", to_string(c.printed)},
                         {"summed", integer_json(c.summed)},
                         {"difference", to_string(diff)}});
  }
  Json castelnuovo = Json::array();
  for (const auto& c : r.castelnuovo) {
    castelnuovo.push_back(
        Json{{"s", c.s}, {"printed", integer_json(c.printed)}, {"summed", integer_json(c.summed)}});
  }
  return Json{{"closed_form_G",
               Json{{"cells_compared", r.cells_compared},
                    {"cells_agreeing", r.cells_agreeing},
                    {"non_integer_printed", r.non_integer_printed},
                    {"differences", std::move(cells)}}},
              {"castelnuovo_p4",
               Json{{"s_compared", r.s_compared},
                    {"s_disagreeing", r.castelnuovo.size()},
                    {"differences", std::move(castelnuovo)}}}};
}

Json verify_json(const catalog::VerifyReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json j{{"s", c.s},
           {"epsilon", c.eps},
           {"m", c.m},
           {"d", integer_json(c.d)},
           {"k", c.k},
           {"v", c.v},
           {"scroll", std::string(scroll::name(c.scroll))},
           {"genus_profile", integer_json(c.genus_profile)},
           {"genus_liaison", optional_integer(c.genus_liaison)}};
    if (c.genus_adjunction) j["genus_adjunction"] = integer_json(*c.genus_adjunction);
    j["status"] = c.status;
    if (!c.note.empty()) j["note"] = c.note;
    cells.push_back(std::move(j));
  }
  return Json{{"cells_checked", r.cells.size()},
              {"adjunction_cells", r.adjunction_cells},
              {"failures", r.failures},
              {"ok", r.ok()},
              {"cells", std::move(cells)}};
}

std::string verify_csv(const catalog::VerifyReport& r) {
  std::ostringstream out;
  out << "s,epsilon,m,d,k,v,scroll,genus_profile,genus_liaison,status\n";
  for (const auto& c : r.cells) {
    out << c.s << ',' << c.eps << ',' << c.m << ',' << c.d.get_str() << ',' << c.k << ',' << c.v << ','
        << scroll::name(c.scroll) << ',' << c.genus_profile.get_str() << ',' << csv_integer(c.genus_liaison) << ','
        << c.status << '\n';
  }
  return out.str();
}

Json sweep_json(const catalog::VerifyReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.cells) {
    const bounds::ExtremalParams p = bounds::decompose(c.d, c.s);
    Json j = params_json(p);
    j["genus_profile"] = integer_json(c.genus_profile);
    j["genus_liaison"] = optional_integer(c.genus_liaison);
    j["genus_closed_form"] = to_string(bounds::closed_form_G(p));
    j["case"] = std::string(classify::name(classify::coarse_case_for(p.k)));
    j["residual_degree"] = p.residual_degree();
    j["status"] = c.status;
    rows.push_back(std::move(j));
  }
  return rows;
}

std::string sweep_csv(const catalog::VerifyReport& r) {
  std::ostringstream out;
  out << "d,s,m,epsilon,w,v,k,delta,e,genus,case,residual_degree,status\n";
  for (const auto& c : r.cells) {
    const bounds::ExtremalParams p = bounds::decompose(c.d, c.s);
    out << p.d.get_str() << ',' << p.s << ',' << p.m.get_str() << ',' << p.eps << ',' << p.w << ',' << p.v << ','
        << p.k << ',' << p.delta << ',' << p.e << ',' << c.genus_profile.get_str() << ','
        << classify::name(classify::coarse_case_for(p.k)) << ',' << p.residual_degree() << ',' << c.status << '\n';
  }
  return out.str();
}

}  // namespace maxgenus::io
