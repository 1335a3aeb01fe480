// Copyright 2026 The qps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qps/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qps/errors.hpp"

namespace qps {

namespace {

using nlohmann::json;

std::string location(const std::string& text, std::size_t byte, const std::string& source) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return source + ":" + std::to_string(line) + ":" + std::to_string(col);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, location(text, e.byte == 0 ? 0 : e.byte - 1, source) + ": " +
                                    "malformed JSON (" + e.what() + ")");
  }
}

[[noreturn]] void schema_error(const std::string& source, const std::string& what) {
  fail(ErrorKind::ParseError, source + ": " + what);
}

const json& field(const json& doc, const char* key, const std::string& source) {
  if (!doc.is_object() || !doc.contains(key)) {
    schema_error(source, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

int int_field(const json& doc, const char* key, const std::string& source) {
  const json& v = field(doc, key, source);
  if (!v.is_number_integer()) schema_error(source, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Operator dense_matrix(const json& m, std::size_t dim, const std::string& source) {
  const json& re = field(m, "re", source);
  const json& im = field(m, "im", source);
  Operator out(dim, dim);
  for (const json* part : {&re, &im}) {
    if (!part->is_array() || part->size() != dim) {
      schema_error(source, "matrix must have " + std::to_string(dim) + " rows");
    }
    for (const json& row : *part) {
      if (!row.is_array() || row.size() != dim) {
        schema_error(source, "matrix rows must have " + std::to_string(dim) + " entries");
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const json& r = re[i][j];
      const json& c = im[i][j];
      if (!r.is_number() || !c.is_number()) schema_error(source, "matrix entries must be numbers");
      out(i, j) = cd(r.get<double>(), c.get<double>());
    }
  }
  return out;
}

Operator char_matrix(const json& entries, int d, int n, const std::string& source) {
  const PhaseSpace space(d, n);
  if (space.size() > kMaxCharTableSize) schema_error(source, "characteristic table too large");
  if (!entries.is_array()) schema_error(source, "\"char\" must be an array");
  CharTable xi{d, n, std::vector<cd>(space.size(), cd(0.0, 0.0))};
  for (const json& e : entries) {
    const json& p = field(e, "p", source);
    const json& q = field(e, "q", source);
    if (!p.is_array() || !q.is_array() || static_cast<int>(p.size()) != n ||
        static_cast<int>(q.size()) != n) {
      schema_error(source, "\"p\" and \"q\" must have n entries");
    }
    PhasePoint x = PhasePoint::zero(n);
    for (int k = 0; k < n; ++k) {
      if (!p[k].is_number_integer() || !q[k].is_number_integer()) {
        schema_error(source, "phase-space coordinates must be integers");
      }
      x.p[k] = space.modulus().reduce(p[k].get<long long>());
      x.q[k] = space.modulus().reduce(q[k].get<long long>());
    }
    const double re = e.value("re", 0.0);
    const double im = e.value("im", 0.0);
    xi.values[space.index(x)] += cd(re, im);
  }
  return from_char(xi);
}

Operator read_operator(const json& doc, int d, int n, const std::string& source) {
  const std::size_t dim = PhaseSpace(d, n).dim();
  if (doc.contains("matrix")) return dense_matrix(doc.at("matrix"), dim, source);
  if (doc.contains("char")) return char_matrix(doc.at("char"), d, n, source);
  schema_error(source, "expected \"matrix\" or \"char\"");
}

DensityOperator state_from(const json& doc, int d, int n, const std::string& source) {
  try {
    return DensityOperator(d, n, read_operator(doc, d, n, source));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    schema_error(source, std::string("invalid state: ") + e.what());
  }
}

json matrix_json(const Operator& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json char_json(const DensityOperator& rho) {
  const PhaseSpace space(rho.d(), rho.n());
  const CharTable xi = char_function(rho);
  json out = json::array();
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    if (std::abs(xi.values[ix]) <= Tolerances{}.tau_supp) continue;
    const PhasePoint x = space.point(ix);
    out.push_back(json{{"p", x.p}, {"q", x.q}, {"re", xi.values[ix].real()},
                       {"im", xi.values[ix].imag()}});
  }
  return out;
}

void put_body(json& doc, const DensityOperator& rho, StateForm form) {
  if (form == StateForm::Dense) {
    doc["matrix"] = matrix_json(rho.matrix());
  } else {
    doc["char"] = char_json(rho);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

DensityOperator parse_state(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  return state_from(doc, int_field(doc, "d", source), int_field(doc, "n", source), source);
}

DensityOperator read_state(const std::string& path) { return parse_state(slurp(path), path); }

std::string write_state(const DensityOperator& rho, StateForm form) {
  json doc{{"d", rho.d()}, {"n", rho.n()}};
  put_body(doc, rho, form);
  return doc.dump(2) + "\n";
}

Channel parse_channel(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (doc.is_object() && doc.contains("kind") && doc.at("kind") != "choi") {
    schema_error(source, "\"kind\" must be \"choi\"");
  }
  const int d = int_field(doc, "d", source);
  const int n = int_field(doc, "n", source);
  if (doc.contains("n_doubled") && int_field(doc, "n_doubled", source) != 2 * n) {
    schema_error(source, "\"n_doubled\" must equal 2n");
  }
  DensityOperator j = state_from(doc, d, 2 * n, source);
  try {
    return Channel(ChoiState(std::move(j)));
  } catch (const Error& e) {
    schema_error(source, std::string("invalid Choi state: ") + e.what());
  }
}

Channel read_channel(const std::string& path) { return parse_channel(slurp(path), path); }

std::string write_channel(const Channel& c, StateForm form) {
  json doc{{"kind", "choi"}, {"d", c.d()}, {"n", c.n()}, {"n_doubled", 2 * c.n()}};
  put_body(doc, c.choi().state(), form);
  return doc.dump(2) + "\n";
}

}  // namespace qps
