#include "cuspidal/serialize.hpp"

#include <sstream>

namespace cuspidal {

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

json rat_to_json(const Rat& x) {
  json j;
  j["num"] = int_to_json(x.get_num());
  j["den"] = int_to_json(x.get_den());
  return j;
}

Rat rat_from_json(const json& j) {
  return make_rat(int_from_json(j.at("num")), int_from_json(j.at("den")));
}

json cusp_to_json(const Cusp& P) {
  json j;
  j["c"] = P.c;
  j["a"] = P.a;
  return j;
}

Cusp cusp_from_json(long N, const json& j) {
  return canonicalize(N, j.at("c").get<long>(), j.at("a").get<long>());
}

json exponent_to_json(const ExponentVector& f) {
  json j;
  j["N"] = f.N;
  j["entries"] = json::array();
  for (const auto& [k, v] : f.entries) {
    json e;
    e["m"] = k.m;
    e["h"] = k.h;
    e["num"] = int_to_json(v.get_num());
    e["den"] = int_to_json(v.get_den());
    j["entries"].push_back(std::move(e));
  }
  return j;
}

ExponentVector exponent_from_json(const json& j) {
  ExponentVector f;
  f.N = j.at("N").get<long>();
  for (const auto& e : j.at("entries"))
    f.add(e.at("m").get<long>(), e.at("h").get<long>(),
          make_rat(int_from_json(e.at("num")), int_from_json(e.at("den"))));
  return f;
}

json divisor_to_json(const Divisor& D) {
  json j;
  j["N"] = D.N;
  j["coeffs"] = json::array();
  for (const auto& [P, v] : D.coeffs) {
    json e;
    e["c"] = P.c;
    e["a"] = P.a;
    e["num"] = int_to_json(v.get_num());
    e["den"] = int_to_json(v.get_den());
    j["coeffs"].push_back(std::move(e));
  }
  return j;
}

Divisor divisor_from_json(const json& j) {
  Divisor D;
  D.N = j.at("N").get<long>();
  for (const auto& e : j.at("coeffs")) {
    Cusp P = canonicalize(D.N, e.at("c").get<long>(), e.at("a").get<long>());
    D.coeffs[P] = make_rat(int_from_json(e.at("num")), int_from_json(e.at("den")));
  }
  return D;
}

json criterion_report_to_json(const CriterionReport& rep) {
  json j;
  j["cond1"] = rep.cond1;
  j["cond2"] = rep.cond2;
  j["cond3"] = rep.cond3;
  j["cond3_applicable"] = rep.cond3_applicable;
  j["cond4"] = rep.cond4;
  j["cond5"] = rep.cond5;
  j["verdict"] = rep.verdict;
  j["order_infinity"] = rat_to_json(rep.order_infinity);
  j["order_zero"] = rat_to_json(rep.order_zero);
  if (rep.cond3_applicable) j["order_half"] = rat_to_json(rep.order_half);
  if (rep.failing_i) j["failing_i"] = *rep.failing_i;
  if (rep.failing_p) j["failing_p"] = *rep.failing_p;
  j["mod2_sums"] = json::array();
  for (auto [p, s] : rep.mod2_sums)
    j["mod2_sums"].push_back(json{{"p", p}, {"sum_mod_2", s}});
  return j;
}

json operator_to_json(const LinearOperator& op) {
  json j;
  j["N"] = op.N;
  j["index"] = json::array();
  for (auto [m, h] : op.index) j["index"].push_back(json{{"m", m}, {"h", h}});
  j["triplets"] = json::array();
  for (const auto& [r, c, v] : op.triplets()) {
    json t;
    t["row"] = r;
    t["col"] = c;
    t["num"] = int_to_json(v.get_num());
    t["den"] = int_to_json(v.get_den());
    j["triplets"].push_back(std::move(t));
  }
  return j;
}

std::string operator_to_csv(const LinearOperator& op) {
  std::ostringstream os;
  os << "row,col,num,den\n";
  for (const auto& [r, c, v] : op.triplets())
    os << r << "," << c << "," << v.get_num().get_str() << ","
       << v.get_den().get_str() << "\n";
  return os.str();
}

json relation_to_json(const RelationCheck& rc) {
  json j;
  j["verdict"] = rc.ok;
  j["eps"] = rc.eps;
  j["lhs"] = divisor_to_json(rc.lhs);
  j["rhs"] = divisor_to_json(rc.rhs);
  return j;
}

json certificate_to_json(const ConjectureACertificate& cert) {
  json j;
  j["verdict"] = cert.verdict;
  j["rows"] = cert.rows;
  j["cols"] = cert.cols;
  j["rank"] = cert.rank;
  j["invariant_factors"] = json::array();
  for (const auto& f : cert.factors) j["invariant_factors"].push_back(int_to_json(f));
  j["block_hashes"] = json::array();
  for (auto [s, hsh] : cert.block_hashes)
    j["block_hashes"].push_back(json{{"s", s}, {"fnv1a64", hsh}});
  return j;
}

json group_to_json(const AbelianGroupStructure& g) {
  json j;
  j["invariant_factors"] = json::array();
  for (const auto& d : g.invariant_factors)
    j["invariant_factors"].push_back(int_to_json(d));
  j["order"] = int_to_json(g.order());
  return j;
}

json classgroup_to_json(const ClassGroupData& data) {
  auto gens = [](const std::vector<Divisor>& ds) {
    json a = json::array();
    for (const auto& D : ds) a.push_back(divisor_to_json(D));
    return a;
  };
  json j;
  j["N"] = data.N;
  j["C_N"] = group_to_json(data.cuspidal);
  j["C_of_N"] = group_to_json(data.rational_classes);
  j["C_N_Q"] = group_to_json(data.rational_points);
  j["yoo_verdict"] = data.yoo_verdict;
  j["C_N_generators"] = gens(data.cuspidal_generators);
  j["C_of_N_generators"] = gens(data.rational_class_generators);
  j["C_N_Q_generators"] = gens(data.rational_point_generators);
  return j;
}

std::string classgroup_to_csv(const ClassGroupData& data) {
  auto facs = [](const AbelianGroupStructure& g) {
    std::string s;
    for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
      if (i) s += " ";
      s += g.invariant_factors[i].get_str();
    }
    return s;
  };
  std::ostringstream os;
  os << data.N << "," << data.cuspidal.order().get_str() << ",\""
     << facs(data.cuspidal) << "\",\"" << facs(data.rational_classes)
     << "\",\"" << facs(data.rational_points) << "\","
     << (data.yoo_verdict ? "true" : "false");
  return os.str();
}

}  // namespace cuspidal
