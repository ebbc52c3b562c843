#include "credal/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace credal {

namespace {

std::string significant17(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("FileNotFound", path);
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("MalformedJson", std::string(e.what()));
  }
}

}  // namespace

CredalPolytope credal_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("vertices")) {
    throw ValidationError("MalformedJson",
                          "expected {\"d\": int, \"vertices\": [[...]]}");
  }
  const Index d = j.at("d").get<Index>();
  const auto& verts = j.at("vertices");
  if (!verts.is_array() || verts.empty()) {
    throw ValidationError("EmptyInput", "vertices array is empty");
  }
  Matrix pts(d, static_cast<Index>(verts.size()));
  Index col = 0;
  for (const auto& v : verts) {
    if (!v.is_array() || static_cast<Index>(v.size()) != d) {
      throw ValidationError("DimensionMismatch",
                            "vertex length does not match d");
    }
    for (Index i = 0; i < d; ++i) {
      pts(i, col) = v.at(static_cast<std::size_t>(i)).get<Real>();
    }
    ++col;
  }
  return make_credal_polytope(pts);
}

CredalPolytope load_credal_set(const std::string& path) {
  return credal_set_from_json(read_json_file(path));
}

std::string credal_set_to_json(const CredalPolytope& poly) {
  std::ostringstream os;
  os << "{\n  \"d\": " << poly.label_count() << ",\n  \"vertices\": [\n";
  for (Index v = 0; v < poly.vertex_count(); ++v) {
    os << "    [";
    for (Index i = 0; i < poly.label_count(); ++i) {
      if (i > 0) os << ", ";
      os << significant17(poly.vertices()(i, v));
    }
    os << (v + 1 < poly.vertex_count() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_credal_set(const std::string& path, const CredalPolytope& poly) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("FileNotWritable", path);
  }
  out << credal_set_to_json(poly);
}

Grouping grouping_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d1") || !j.contains("d2") ||
      !j.contains("assign")) {
    throw ValidationError(
        "MalformedJson",
        "expected {\"d1\": int, \"d2\": int, \"assign\": [[i1,i2],...]}");
  }
  Grouping g;
  g.d1 = j.at("d1").get<Index>();
  g.d2 = j.at("d2").get<Index>();
  for (const auto& pair : j.at("assign")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ValidationError("MalformedJson", "assign entries are pairs");
    }
    g.assign.emplace_back(pair.at(0).get<Index>(), pair.at(1).get<Index>());
  }
  return g;
}

Grouping load_grouping(const std::string& path) {
  return grouping_from_json(read_json_file(path));
}

Json to_json(const VolumeResult& r) {
  return Json{{"k", r.k},
              {"value", r.value},
              {"stderr", r.std_error},
              {"method", r.method}};
}

Json to_json(const AxiomReport& r) {
  return Json{{"axiom", r.axiom},
              {"verdict", to_string(r.verdict)},
              {"witness", r.witness},
              {"tolerance", r.tolerance}};
}

Json to_json(const SubadditivityReport& r) {
  return Json{{"vol_joint", r.vol_joint},
              {"vol_marginal1", r.vol_marginal1},
              {"vol_marginal2", r.vol_marginal2},
              {"degenerate_factor", r.degenerate_factor},
              {"a5", to_json(r.a5)},
              {"a6", to_json(r.a6)}};
}

Json to_json(const Theorem1Report& r) {
  return Json{{"d", r.d},
              {"eps", r.eps},
              {"r", r.r},
              {"vol_p", r.vol_p},
              {"vol_q", r.vol_q},
              {"vol_q_prime", r.vol_q_prime},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"shell_ratio", r.shell_ratio},
              {"n_pack_p", r.n_pack_p},
              {"n_pack_shell", r.n_pack_shell},
              {"c_hat_p", r.c_hat_p},
              {"c_hat_shell", r.c_hat_shell},
              {"identity_ok", r.identity_ok},
              {"condition_c_ok", r.condition_c_ok},
              {"inequality_evaluated", r.inequality_evaluated},
              {"inequality_holds", r.inequality_holds},
              {"estimates_uncertain", r.estimates_uncertain}};
}

Json to_json(const CarlPajorReport& r) {
  return Json{{"d", r.d},
              {"m", r.m},
              {"samples", r.samples},
              {"seed", r.seed},
              {"bound", r.bound},
              {"ratio", r.ratio},
              {"stderr", r.std_error},
              {"hull_dim", r.hull_dim}};
}

Json to_json(const PackingResult& r) {
  Json centers = Json::array();
  for (Index i = 0; i < r.count; ++i) {
    Json c = Json::array();
    for (Index k = 0; k < r.centers.rows(); ++k) c.push_back(r.centers(k, i));
    centers.push_back(std::move(c));
  }
  Json clearance = Json::array();
  for (Index i = 0; i < r.clearance.size(); ++i) {
    clearance.push_back(r.clearance(i));
  }
  return Json{{"radius", r.radius},
              {"count", r.count},
              {"centers", centers},
              {"restarts_used", r.restarts_used},
              {"grid_pitch", r.grid_pitch},
              {"clearance", clearance},
              {"min_separation_slack", r.min_separation_slack},
              {"maximal_certified", r.maximal_certified}};
}

Json to_json(const LiftResult& r) {
  Json verts = Json::array();
  for (Index v = 0; v < r.lifted.vertex_count(); ++v) {
    Json row = Json::array();
    for (Index i = 0; i < r.lifted.label_count(); ++i) {
      row.push_back(r.lifted.vertices()(i, v));
    }
    verts.push_back(std::move(row));
  }
  Json vmat = Json::array();
  for (Index i = 0; i < r.spec.V.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < r.spec.V.cols(); ++j) row.push_back(r.spec.V(i, j));
    vmat.push_back(std::move(row));
  }
  Json b = Json::array();
  for (Index i = 0; i < r.spec.b.size(); ++i) b.push_back(r.spec.b(i));
  return Json{{"vertices", verts},
              {"V", vmat},
              {"b", b},
              {"gap", r.gap},
              {"volumes",
               Json{{"source", r.source_volume}, {"lifted", r.lifted_volume}}},
              {"params", r.params}};
}

}  // namespace credal
