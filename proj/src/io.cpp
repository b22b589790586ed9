#include "spinz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spinz {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

OrientedGraph graph_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("n") || !j.contains("edges")) throw ParseError("graph needs 'n' and 'edges'");
  const int n = j.at("n").get<int>();
  const auto& je = j.at("edges");
  std::vector<Edge> edges(je.size());
  std::vector<bool> seen(je.size(), false);
  for (const auto& item : je) {
    const int id = item.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(edges.size()) || seen[id])
      throw ParseError("edge ids must be dense and unique");
    seen[id] = true;
    edges[id] = {item.at("head").get<int>(), item.at("tail").get<int>()};
  }
  if (!j.contains("rotation")) {
    try {
      return OrientedGraph(n, std::move(edges));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  RotationSystem rot(n);
  for (const auto& [key, list] : j.at("rotation").items()) {
    const int v = std::stoi(key);
    if (v < 0 || v >= n) throw ParseError("rotation vertex out of range");
    for (const auto& entry : list) {
      const std::string end = entry.at(1).get<std::string>();
      if (end != "head" && end != "tail") throw ParseError("rotation end must be head or tail");
      rot[v].push_back({entry.at(0).get<int>(),
                        end == "head" ? EdgeEnd::Head : EdgeEnd::Tail});
    }
  }
  try {
    return OrientedGraph(n, std::move(edges), std::move(rot));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string graph_to_json(const OrientedGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    j["edges"].push_back({{"id", e}, {"head", g.edge(e).head}, {"tail", g.edge(e).tail}});
  if (g.has_embedding()) {
    json rot = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      json list = json::array();
      for (const RotationEntry& r : g.rotation()[v])
        list.push_back({r.edge, r.end == EdgeEnd::Head ? "head" : "tail"});
      rot[std::to_string(v)] = std::move(list);
    }
    j["rotation"] = std::move(rot);
  }
  return j.dump();
}

ModelFile model_from_json(const std::string& text) {
  const json j = parse(text);
  ModelFile m;
  if (!j.contains("q")) throw ParseError("model needs 'q'");
  m.modulus = j.at("q").get<int>();
  if (m.modulus < 2) throw ParseError("q must be at least 2");
  if (j.contains("beta")) {
    m.beta = j.at("beta").get<double>();
    if (!(m.beta > 0.0)) throw ParseError("beta must be positive");
  }
  if (j.contains("weights")) {
    const auto& rows = j.at("weights");
    ComplexMat w(rows.size(), m.modulus);
    for (int e = 0; e < static_cast<int>(rows.size()); ++e) {
      if (static_cast<int>(rows[e].size()) != m.modulus)
        throw ParseError("weight rows must have q entries");
      for (int k = 0; k < m.modulus; ++k)
        w(e, k) = Complex(rows[e][k].at(0).get<double>(), rows[e][k].at(1).get<double>());
    }
    m.weights = std::move(w);
    return m;
  }
  if (!j.contains("edges")) throw ParseError("model needs 'edges' or 'weights'");
  const auto& rows = j.at("edges");
  RealMat h(rows.size(), m.modulus);
  for (int e = 0; e < static_cast<int>(rows.size()); ++e) {
    const auto& item = rows[e];
    if (item.contains("table")) {
      const auto& t = item.at("table");
      if (static_cast<int>(t.size()) != m.modulus)
        throw ParseError("energy table must have q entries");
      for (int k = 0; k < m.modulus; ++k) h(e, k) = t[k].get<double>();
      continue;
    }
    const std::string type = item.at("type").get<std::string>();
    const double coupling = item.at("J").get<double>();
    RealVec one(1);
    one[0] = coupling;
    if (type == "potts") {
      h.row(e) = potts_table(m.modulus, one, 1.0).energies.row(0);
    } else if (type == "ising") {
      if (m.modulus != 2) throw ParseError("ising edges require q = 2");
      h.row(e) = ising_table(one, 1.0).energies.row(0);
    } else if (type == "clock") {
      h.row(e) = clock_table(m.modulus, one, 1.0).energies.row(0);
    } else {
      throw ParseError("unknown edge type '" + type + "'");
    }
  }
  if (!h.allFinite()) throw ParseError("energies must be finite");
  m.energies = std::move(h);
  return m;
}

std::string model_to_json(const InteractionTable& t) {
  json j;
  j["q"] = t.modulus;
  j["beta"] = t.beta;
  j["edges"] = json::array();
  for (int e = 0; e < t.edge_count(); ++e) {
    json row = json::array();
    for (int k = 0; k < t.modulus; ++k) row.push_back(t.energies(e, k));
    j["edges"].push_back({{"table", std::move(row)}});
  }
  return j.dump();
}

std::string weights_to_json(const WeightTable& w, double beta) {
  json j;
  j["q"] = w.modulus;
  j["beta"] = beta;
  j["weights"] = json::array();
  for (int e = 0; e < w.edge_count(); ++e) {
    json row = json::array();
    for (int k = 0; k < w.modulus; ++k)
      row.push_back({w.weights(e, k).real(), w.weights(e, k).imag()});
    j["weights"].push_back(std::move(row));
  }
  return j.dump();
}

std::string certificate_to_json(const DualityCertificate& c) {
  json j;
  j["q"] = c.modulus;
  j["primal_vertices"] = c.primal_vertices;
  j["dual_vertices"] = c.dual_vertices;
  j["edges"] = c.edge_count;
  j["r"] = {{"num", c.r_num}, {"den", c.r_den}};
  return j.dump();
}

std::string report_to_json(const EvalReport& r, double beta) {
  json j;
  j["beta"] = beta;
  j["method"] = r.method;
  j["width"] = r.width;
  j["cost"] = r.cost;
  j["value"] = {{"mantissa_re", r.value.mantissa().real()},
                {"mantissa_im", r.value.mantissa().imag()},
                {"exponent2", r.value.exponent2()},
                {"decimal", r.value.decimal_string()}};
  return j.dump();
}

std::string report_csv_header() {
  return "beta,value_re_mantissa,value_im_mantissa,exponent2,value_decimal,method,width,cost";
}

std::string report_csv_row(const EvalReport& r, double beta) {
  std::ostringstream out;
  out << fmt_double(beta) << ',' << fmt_double(r.value.mantissa().real()) << ','
      << fmt_double(r.value.mantissa().imag()) << ',' << r.value.exponent2() << ','
      << r.value.decimal_string() << ',' << r.method << ',' << r.width << ',' << r.cost;
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

}  // namespace spinz
