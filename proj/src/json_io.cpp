#include "aro/json_io.hpp"

#include <fstream>
#include <json.hpp>

namespace aro {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Matrix matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                        const char* name) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) {
    throw Error(Errc::IoError, std::string("bad row count for ") + name);
  }
  Matrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(Errc::IoError, std::string("bad column count for ") + name);
    }
    for (Eigen::Index c = 0; c < cols; ++c) M(i, c) = row[static_cast<size_t>(c)].get<double>();
  }
  return M;
}

Vector vector_from_json(const json& j, Eigen::Index len, const char* name) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != len) {
    throw Error(Errc::IoError, std::string("bad length for ") + name);
  }
  Vector v(len);
  for (Eigen::Index i = 0; i < len; ++i) v[i] = j[static_cast<size_t>(i)].get<double>();
  return v;
}

}  // namespace

std::string problem_to_json(const GeneratedProblem& gp) {
  const auto& inst = gp.instance;
  json doc;
  doc["m"] = inst.m();
  doc["n"] = inst.n();
  doc["A"] = matrix_to_json(inst.A);
  doc["B"] = matrix_to_json(inst.B);
  doc["c"] = vector_to_json(inst.c);
  doc["d"] = vector_to_json(inst.d);
  json X;
  X["F"] = matrix_to_json(inst.first_stage_set.F);
  X["g"] = vector_to_json(inst.first_stage_set.g);
  X["upper"] = inst.first_stage_set.upper ? vector_to_json(*inst.first_stage_set.upper)
                                          : json(nullptr);
  doc["X"] = std::move(X);

  json U;
  if (const auto* b = gp.set.as_budget()) {
    U["type"] = "budget";
    U["w"] = vector_to_json(b->w);
  } else if (const auto* s = gp.set.as_intersection()) {
    U["type"] = "intersection";
    json blocks = json::array();
    for (const auto& blk : s->blocks) {
      json jb;
      jb["S"] = blk.support;
      jb["w"] = vector_to_json(blk.w);
      blocks.push_back(std::move(jb));
    }
    U["blocks"] = std::move(blocks);
    U["disjoint"] = s->disjoint;
  } else {
    const auto& g = std::get<GeneralPolyhedralSet>(gp.set.variant());
    U["type"] = "polyhedral";
    U["R"] = matrix_to_json(g.R);
    U["r"] = vector_to_json(g.r);
  }
  doc["U"] = std::move(U);
  return doc.dump(2) + "\n";
}

GeneratedProblem problem_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::IoError, std::string("instance JSON parse failure: ") + e.what());
  }
  try {
    const Eigen::Index m = doc.at("m").get<Eigen::Index>();
    const Eigen::Index n = doc.at("n").get<Eigen::Index>();
    TwoStageInstance inst;
    inst.A = matrix_from_json(doc.at("A"), m, n, "A");
    inst.B = matrix_from_json(doc.at("B"), m, n, "B");
    inst.c = vector_from_json(doc.at("c"), n, "c");
    inst.d = vector_from_json(doc.at("d"), n, "d");
    inst.b_nonnegative = inst.B.size() == 0 || inst.B.minCoeff() >= 0.0;
    const auto& X = doc.at("X");
    const auto& F = X.at("F");
    const Eigen::Index p = static_cast<Eigen::Index>(F.size());
    inst.first_stage_set.F = matrix_from_json(F, p, n, "X.F");
    inst.first_stage_set.g = vector_from_json(X.at("g"), p, "X.g");
    if (!X.at("upper").is_null()) {
      inst.first_stage_set.upper = vector_from_json(X.at("upper"), n, "X.upper");
    }
    inst.validate();

    const auto& U = doc.at("U");
    const std::string type = U.at("type").get<std::string>();
    if (type == "budget") {
      return {std::move(inst), UncertaintySet::budget(vector_from_json(U.at("w"), m, "U.w"))};
    }
    if (type == "intersection") {
      std::vector<BudgetBlock> blocks;
      for (const auto& jb : U.at("blocks")) {
        BudgetBlock blk;
        blk.support = jb.at("S").get<std::vector<int>>();
        blk.w = vector_from_json(jb.at("w"), static_cast<Eigen::Index>(blk.support.size()),
                                 "block w");
        blocks.push_back(std::move(blk));
      }
      return {std::move(inst), UncertaintySet::intersection(m, std::move(blocks))};
    }
    if (type == "polyhedral") {
      const Eigen::Index L = static_cast<Eigen::Index>(U.at("R").size());
      return {std::move(inst),
              UncertaintySet::polyhedral(matrix_from_json(U.at("R"), L, m, "U.R"),
                                         vector_from_json(U.at("r"), L, "U.r"))};
    }
    throw Error(Errc::IoError, "unknown uncertainty set type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(Errc::IoError, std::string("instance JSON structure: ") + e.what());
  }
}

void save_problem(const GeneratedProblem& gp, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  out << problem_to_json(gp);
  if (!out) throw Error(Errc::IoError, "failed while writing '" + path + "'");
}

GeneratedProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return problem_from_json(text);
}

}  // namespace aro
