#include "gurlab/problem.hpp"

#include <fstream>

#include <json.hpp>

namespace gur {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix parse_matrix(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  }
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(where + "[" + std::to_string(r) + "]: expected " +
                       std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      m(r, c) = parse_complex(row[c], where + "[" + std::to_string(r) + "][" +
                                          std::to_string(c) + "]");
    }
  }
  if (!is_finite(m)) throw ParseError(where + ": non-finite entries");
  return m;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json dump_matrix(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(dump_complex(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem file: top level must be an object");
  reject_unknown(j, {"dim", "observables", "state", "params"}, "problem file");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    throw ParseError("dim: required integer field");
  }
  ProblemFile p;
  p.dim = j["dim"].get<int>();
  if (p.dim < 1) throw ParseError("dim: must be >= 1");

  if (j.contains("observables")) {
    if (!j["observables"].is_object()) throw ParseError("observables: expected object");
    for (const auto& [name, mat] : j["observables"].items()) {
      p.observables.emplace(name, parse_matrix(mat, p.dim, "observables." + name));
    }
  }

  if (!j.contains("state") || !j["state"].is_object()) {
    throw ParseError("state: required object field");
  }
  const json& st = j["state"];
  reject_unknown(st, {"kind", "data"}, "state");
  if (!st.contains("kind") || !st["kind"].is_string()) {
    throw ParseError("state.kind: required string field");
  }
  const std::string kind = st["kind"].get<std::string>();
  if (!st.contains("data")) throw ParseError("state.data: required field");
  try {
    if (kind == "pure") {
      const json& data = st["data"];
      if (!data.is_array() || static_cast<int>(data.size()) != p.dim) {
        throw ParseError("state.data: expected " + std::to_string(p.dim) +
                         " amplitudes");
      }
      CVector v(p.dim);
      for (int i = 0; i < p.dim; ++i) {
        v[i] = parse_complex(data[i], "state.data[" + std::to_string(i) + "]");
      }
      p.state = State::pure(std::move(v));
    } else if (kind == "density") {
      p.state = State::density(parse_matrix(st["data"], p.dim, "state.data"));
    } else {
      throw ParseError("state.kind: must be 'pure' or 'density'");
    }
  } catch (const ValidationError& e) {
    throw ParseError(std::string("state: ") + e.what());
  }

  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("params: expected object");
    for (const auto& [name, value] : j["params"].items()) {
      p.params.emplace(name, parse_complex(value, "params." + name));
    }
  }
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_problem(text);
}

std::string serialize_problem(const ProblemFile& problem) {
  json j;
  j["dim"] = problem.dim;
  json obs = json::object();
  for (const auto& [name, m] : problem.observables) obs[name] = dump_matrix(m);
  j["observables"] = std::move(obs);
  json st;
  if (problem.state.is_pure()) {
    st["kind"] = "pure";
    json data = json::array();
    for (Eigen::Index i = 0; i < problem.state.vector().size(); ++i) {
      data.push_back(dump_complex(problem.state.vector()[i]));
    }
    st["data"] = std::move(data);
  } else {
    st["kind"] = "density";
    st["data"] = dump_matrix(problem.state.rho());
  }
  j["state"] = std::move(st);
  json params = json::object();
  for (const auto& [name, z] : problem.params) params[name] = dump_complex(z);
  j["params"] = std::move(params);
  return j.dump(2);
}

} // namespace gur
