#include "sublat/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace sublat {

namespace {

Json table_to_json(const OpTable& t) {
  Json rows = Json::array();
  for (int a = 0; a < t.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < t.size(); ++b) row.push_back(t(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

OpTable table_from_json(const Json& j, int size, const char* what) {
  std::vector<int> cells;
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array");
  if (!j.empty() && j.front().is_array()) {
    for (const Json& row : j) {
      if (!row.is_array() || static_cast<int>(row.size()) != size)
        throw ValidationError(std::string(what) + ": row of wrong length");
      for (const Json& cell : row) cells.push_back(cell.get<int>());
    }
  } else {
    for (const Json& cell : j) cells.push_back(cell.get<int>());
  }
  if (static_cast<int>(cells.size()) != size * size)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(size * size) + " cells");
  return OpTable(size, std::move(cells));
}

std::optional<FinitePoset> poset_from_json(const Json& j, int size) {
  if (!j.contains("leq")) return std::nullopt;
  std::vector<std::pair<int, int>> pairs;
  for (const Json& p : j.at("leq")) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("leq: expected [i, j] pairs");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return FinitePoset::from_pairs(size, pairs);
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& algebra, const std::optional<std::vector<int>>& designated) {
  Json j;
  j["size"] = algebra.size;
  if (algebra.names) j["names"] = *algebra.names;
  j["imp"] = table_to_json(algebra.imp);
  if (algebra.meet) j["meet"] = table_to_json(*algebra.meet);
  if (algebra.join) j["join"] = table_to_json(*algebra.join);
  if (algebra.neg) j["neg"] = algebra.neg->cells();
  j["top"] = algebra.top;
  if (algebra.bottom) j["bottom"] = *algebra.bottom;
  if (designated) j["D"] = *designated;
  return j;
}

LoadedAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("size")) throw ValidationError("algebra file: missing size");
  const int size = j.at("size").get<int>();
  if (size <= 0) throw ValidationError("algebra file: size must be positive");

  FiniteAlgebra a;
  a.size = size;
  if (j.contains("names")) a.names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("imp")) a.imp = table_from_json(j.at("imp"), size, "imp");
  if (j.contains("meet")) a.meet = table_from_json(j.at("meet"), size, "meet");
  if (j.contains("join")) a.join = table_from_json(j.at("join"), size, "join");
  if (j.contains("neg")) {
    auto cells = j.at("neg").get<std::vector<int>>();
    if (static_cast<int>(cells.size()) != size) throw ValidationError("neg: expected size entries");
    a.neg = UnTable(std::move(cells));
  }
  if (!j.contains("top")) throw ValidationError("algebra file: missing top");
  a.top = j.at("top").get<int>();
  if (j.contains("bottom")) a.bottom = j.at("bottom").get<int>();

  std::optional<FinitePoset> order = poset_from_json(j, size);

  // derive lattice tables from leq when absent
  if (order) {
    bool has_all_glb = true, has_all_lub = true;
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        if (!order->glb(x, y)) has_all_glb = false;
        if (!order->lub(x, y)) has_all_lub = false;
      }
    if (!a.meet && has_all_glb) {
      OpTable meet(size);
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) meet.at(x, y) = *order->glb(x, y);
      a.meet = std::move(meet);
    }
    if (!a.join && has_all_lub) {
      OpTable join(size);
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) join.at(x, y) = *order->lub(x, y);
      a.join = std::move(join);
    }
  }

  if (!j.contains("imp")) a.imp = OpTable(size, 0);  // lattice-only file; load_algebra rejects it
  a.validate_shape();

  // consistency against leq
  if (order) {
    if (a.meet || a.join) {
      FiniteLattice check;
      check.poset = *order;
      if (a.meet)
        check.meet = *a.meet;
      else {
        for (int x = 0; x < size; ++x)
          for (int y = 0; y < size; ++y)
            if (!order->glb(x, y)) throw ValidationError("leq: no infimum for a pair");
        OpTable meet(size);
        for (int x = 0; x < size; ++x)
          for (int y = 0; y < size; ++y) meet.at(x, y) = *order->glb(x, y);
        check.meet = std::move(meet);
      }
      check.join = a.join;
      check.top = a.top;
      check.bottom = a.bottom;
      check.validate();  // rejects meet/join/top/bottom inconsistent with leq
    } else if (j.contains("imp")) {
      FinitePoset natural = natural_order(a);
      if (natural != *order) throw ValidationError("leq is inconsistent with the natural order of imp");
    }
  } else if (a.meet) {
    underlying_lattice(a);  // throws when the tables are not a lattice
  }

  LoadedAlgebra out;
  out.algebra = std::move(a);
  if (j.contains("D")) {
    auto d = j.at("D").get<std::vector<int>>();
    for (int x : d)
      if (x < 0 || x >= size) throw ValidationError("D: index out of range");
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    if (j.contains("imp")) {
      std::vector<int> box = box_set(out.algebra);
      if (box != d) throw ValidationError("D is inconsistent with {x : 1 -> x = x}");
    }
    out.designated = std::move(d);
  }
  return out;
}

FiniteAlgebra load_algebra(const Json& j) {
  if (!j.contains("imp")) throw ValidationError("algebra file: missing imp table");
  return algebra_from_json(j).algebra;
}

FiniteLattice load_lattice(const Json& j) {
  if (j.contains("imp")) throw ValidationError("lattice file: unexpected imp table");
  LoadedAlgebra loaded = algebra_from_json(j);
  const FiniteAlgebra& a = loaded.algebra;
  if (!a.meet || !a.join) throw ValidationError("lattice file: needs meet and join (or a lattice leq)");
  if (!a.bottom) throw ValidationError("lattice file: needs a bottom");
  return underlying_lattice(a);
}

Json verdict_to_json(const ClassVerdict& verdict) {
  Json j;
  j["member"] = verdict.member;
  Json violations = Json::array();
  for (const Violation& v : verdict.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  j["violations"] = std::move(violations);
  return j;
}

Proof proof_from_json(const Json& j) {
  Proof p;
  p.calculus = j.value("calculus", "");
  if (j.contains("hypotheses"))
    for (const Json& h : j.at("hypotheses")) p.hypotheses.push_back(parse_formula(h.get<std::string>()));
  for (const Json& line : j.at("lines")) {
    Formula f = parse_formula(line.at("formula").get<std::string>());
    const std::string rule = line.at("rule").get<std::string>();
    const auto colon = rule.find(':');
    const std::string head = rule.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : rule.substr(colon + 1);
    Justification just;
    auto parse_two = [&]() {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw ValidationError("proof file: rule '" + rule + "' needs two citations");
      return std::pair<int, int>{std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))};
    };
    if (head == "axiom")
      just = Justification::axiom(args);
    else if (head == "hyp")
      just = Justification::hyp(std::stoi(args));
    else if (head == "mp") {
      auto [a, b] = parse_two();
      just = Justification::mp(a, b);
    } else if (head == "t")
      just = Justification::t(std::stoi(args));
    else if (head == "c") {
      auto [a, b] = parse_two();
      just = Justification::c(a, b);
    } else
      throw ValidationError("proof file: unknown rule '" + rule + "'");
    p.lines.push_back({std::move(f), just});
  }
  return p;
}

Json proof_to_json(const Proof& proof) {
  Json j;
  j["calculus"] = proof.calculus;
  Json hyps = Json::array();
  for (const Formula& h : proof.hypotheses) hyps.push_back(h.to_string());
  j["hypotheses"] = std::move(hyps);
  Json lines = Json::array();
  for (const ProofLine& line : proof.lines) {
    std::string rule;
    switch (line.just.kind) {
      case Justification::Kind::Hyp: rule = "hyp:" + std::to_string(line.just.i); break;
      case Justification::Kind::Axiom: rule = "axiom:" + line.just.axiom_label; break;
      case Justification::Kind::MP:
        rule = "mp:" + std::to_string(line.just.i) + "," + std::to_string(line.just.j);
        break;
      case Justification::Kind::T: rule = "t:" + std::to_string(line.just.i); break;
      case Justification::Kind::C:
        rule = "c:" + std::to_string(line.just.i) + "," + std::to_string(line.just.j);
        break;
    }
    lines.push_back({{"formula", line.formula.to_string()}, {"rule", rule}});
  }
  j["lines"] = std::move(lines);
  return j;
}

Json proof_verdict_to_json(const ProofVerdict& verdict) {
  Json j;
  j["valid"] = verdict.valid;
  Json problems = Json::array();
  for (const LineDiagnostic& d : verdict.problems) problems.push_back({{"line", d.line}, {"message", d.message}});
  j["problems"] = std::move(problems);
  return j;
}

Json countermodel_to_json(const Countermodel& cm) {
  Json j;
  j["class"] = to_string(cm.cls);
  j["algebra"] = algebra_to_json(cm.algebra);
  j["valuation"] = cm.valuation;
  j["formula"] = cm.formula.to_string();
  j["value"] = cm.value;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace sublat
