#pragma once

// JSON file formats.
//
//   group:  {"order":n, "names":[...], "mul":[[...]]}
//   rep:    {"dim":d, "mats":[<matrix>, ...]}        one matrix per element
//   matrix: nested rows, each entry [re, im]
//   params: {"kind":"character", "group":<group>, "alphas":[{"weight":w,"rep":<rep>},...],
//            "betas":[...], "tau":<rep or null>}
//         | {"kind":"state", "group":<group>, "pm":{"A":<matrix>,"rho":<rep>} | null,
//            "reg":{"rho11":<rep>,"xi":[[re,im],...],"copies":n} | null}
//   report: array of check reports
//
// "group" may also be a string path, resolved relative to the params file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "wreath/characters.hpp"
#include "wreath/state.hpp"
#include "wreath/verify.hpp"

namespace wreath {

using json = nlohmann::json;
using ParamsVariant = std::variant<CharacterParams, StateParams>;

inline json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw parse_error("expected [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(complex_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("matrix: expected an array of rows");
  const int rows = static_cast<int>(j.size());
  if (rows == 0) return CMatrix();
  const int cols = static_cast<int>(j[0].size());
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw parse_error("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

inline json group_to_json(const Group& g) {
  return json{{"order", g.order}, {"names", g.names}, {"mul", g.mul}};
}

inline Group group_from_json(const json& j) {
  if (!j.contains("names") || !j.contains("mul")) throw parse_error("group: need names and mul");
  std::vector<std::string> names = j["names"].get<std::vector<std::string>>();
  std::vector<std::vector<int>> mul = j["mul"].get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j["order"].get<int>() != static_cast<int>(names.size()))
    throw parse_error("group: order field disagrees with names");
  return Group::from_table(std::move(names), std::move(mul));
}

inline json rep_to_json(const Rep& r) {
  json mats = json::array();
  for (const auto& m : r.mats) mats.push_back(matrix_to_json(m));
  return json{{"dim", r.dim}, {"mats", std::move(mats)}};
}

inline Rep rep_from_json(const json& j, const Group& g) {
  if (!j.contains("mats")) throw parse_error("rep: need mats");
  std::vector<CMatrix> mats;
  for (const auto& mj : j["mats"]) mats.push_back(matrix_from_json(mj));
  Rep r = make_rep(g, std::move(mats));
  if (j.contains("dim") && j["dim"].get<int>() != r.dim)
    throw parse_error("rep: dim field disagrees with matrices");
  return r;
}

inline Group resolve_group(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    std::ifstream in(p);
    if (!in) throw parse_error("cannot open group file " + p.string());
    json gj;
    in >> gj;
    return group_from_json(gj);
  }
  return group_from_json(j);
}

inline ParamsVariant params_from_json(const json& j, const std::filesystem::path& base_dir = ".") {
  if (!j.contains("kind")) throw parse_error("params: missing kind");
  const std::string kind = j["kind"].get<std::string>();
  const Group g = resolve_group(j.at("group"), base_dir);
  if (kind == "character") {
    CharacterParams p;
    p.group = g;
    auto read_list = [&](const char* key, std::vector<WeightedRep>& out) {
      if (!j.contains(key) || j[key].is_null()) return;
      for (const auto& item : j[key]) {
        WeightedRep wr;
        wr.weight = item.at("weight").get<double>();
        wr.rep = rep_from_json(item.at("rep"), g);
        out.push_back(std::move(wr));
      }
    };
    read_list("alphas", p.alphas);
    read_list("betas", p.betas);
    if (j.contains("tau") && !j["tau"].is_null()) p.tau = rep_from_json(j["tau"], g);
    validate_character(p);
    return p;
  }
  if (kind == "state") {
    StateParams p;
    p.group = g;
    if (j.contains("pm") && !j["pm"].is_null()) {
      PmBlock b;
      b.A = matrix_from_json(j["pm"].at("A"));
      b.rho = rep_from_json(j["pm"].at("rho"), g);
      p.pm = std::move(b);
    }
    if (j.contains("reg") && !j["reg"].is_null()) {
      RegBlock r;
      r.rho11 = rep_from_json(j["reg"].at("rho11"), g);
      for (const auto& x : j["reg"].at("xi")) r.xi.push_back(complex_from_json(x));
      r.copies = j["reg"].value("copies", 1);
      p.reg = std::move(r);
    }
    validate_state(p);
    return p;
  }
  throw parse_error("params: unknown kind '" + kind + "'");
}

inline ParamsVariant load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open params file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("bad JSON in " + path + ": " + e.what());
  }
  try {
    return params_from_json(j, std::filesystem::path(path).parent_path());
  } catch (const json::exception& e) {
    throw parse_error("bad params in " + path + ": " + e.what());
  }
}

inline json params_to_json(const CharacterParams& p) {
  json j;
  j["kind"] = "character";
  j["group"] = group_to_json(p.group);
  j["alphas"] = json::array();
  for (const auto& wr : p.alphas)
    j["alphas"].push_back(json{{"weight", wr.weight}, {"rep", rep_to_json(wr.rep)}});
  j["betas"] = json::array();
  for (const auto& wr : p.betas)
    j["betas"].push_back(json{{"weight", wr.weight}, {"rep", rep_to_json(wr.rep)}});
  j["tau"] = p.tau ? rep_to_json(*p.tau) : json();
  return j;
}

inline json params_to_json(const StateParams& p) {
  json j;
  j["kind"] = "state";
  j["group"] = group_to_json(p.group);
  if (p.pm)
    j["pm"] = json{{"A", matrix_to_json(p.pm->A)}, {"rho", rep_to_json(p.pm->rho)}};
  else
    j["pm"] = json();
  if (p.reg) {
    json xi = json::array();
    for (const auto& x : p.reg->xi) xi.push_back(complex_to_json(x));
    j["reg"] = json{{"rho11", rep_to_json(p.reg->rho11)}, {"xi", std::move(xi)},
                    {"copies", p.reg->copies}};
  } else {
    j["reg"] = json();
  }
  return j;
}

inline json reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports)
    arr.push_back(json{{"name", r.name},
                       {"property", r.property},
                       {"passed", r.passed},
                       {"worst_residual", r.worst_residual},
                       {"tolerance", r.tolerance},
                       {"samples", r.samples},
                       {"seed", r.seed},
                       {"details", r.details}});
  return arr;
}

inline void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

// 12 significant digits; pure reals print without the imaginary part
inline std::string format_value(const cplx& z) {
  char buf[64];
  auto fmt = [&](double x) {
    if (x == 0) x = 0;  // normalize -0
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  if (std::abs(z.imag()) <= 1e-12) return fmt(z.real());
  const std::string re = fmt(z.real());
  std::string im = fmt(std::abs(z.imag()));
  return re + (z.imag() < 0 ? "-" : "+") + im + "i";
}

}  // namespace wreath
