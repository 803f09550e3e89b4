#include "tcw/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "nlohmann/json.hpp"

namespace tcw {

namespace {

bool has_children(const Gate& g) {
  return g.kind == Gate::Kind::EXTREMUM || g.kind == Gate::Kind::SUM;
}

}  // namespace

Circuit::Circuit(SemiringFlavor flavor, VarUniverse universe,
                 std::shared_ptr<const std::vector<Gate>> gates, std::uint32_t output)
    : flavor_(flavor), universe_(std::move(universe)), gates_(std::move(gates)), output_(output) {
  if (!gates_ || output_ >= gates_->size())
    throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "output gate");
}

CircuitBuilder::CircuitBuilder(SemiringFlavor flavor, VarUniverse universe)
    : flavor_(flavor), universe_(std::move(universe)) {}

std::uint32_t CircuitBuilder::add_input(std::uint32_t var) {
  if (var >= universe_.size()) throw Error(ErrorCode::SUPPORT_NOT_IN_UNIVERSE, "input gate");
  gates_.push_back({Gate::Kind::INPUT, var, 0, 0});
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t CircuitBuilder::add_const0() {
  gates_.push_back({Gate::Kind::CONST_ZERO, 0, 0, 0});
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t CircuitBuilder::add_ext(std::uint32_t l, std::uint32_t r) {
  if (l >= gates_.size() || r >= gates_.size())
    throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "ext child");
  gates_.push_back({Gate::Kind::EXTREMUM, 0, l, r});
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

std::uint32_t CircuitBuilder::add_sum(std::uint32_t l, std::uint32_t r) {
  if (l >= gates_.size() || r >= gates_.size())
    throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "sum child");
  gates_.push_back({Gate::Kind::SUM, 0, l, r});
  return static_cast<std::uint32_t>(gates_.size() - 1);
}

Circuit CircuitBuilder::build(std::uint32_t output) {
  if (!built_ || built_->size() != gates_.size())
    built_ = std::make_shared<const std::vector<Gate>>(gates_);
  return Circuit(flavor_, universe_, built_, output);
}

std::vector<std::uint32_t> topological_order(const std::vector<Gate>& gates) {
  // Kahn over child -> parent edges; indices may be arbitrarily ordered.
  for (auto& g : gates)
    if (has_children(g) && (g.l >= gates.size() || g.r >= gates.size()))
      throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "gate child");
  std::vector<std::vector<std::uint32_t>> parents(gates.size());
  std::vector<std::uint32_t> deps(gates.size(), 0);
  for (std::uint32_t i = 0; i < gates.size(); ++i)
    if (has_children(gates[i])) {
      parents[gates[i].l].push_back(i);
      parents[gates[i].r].push_back(i);
      deps[i] = 2;
    }
  std::vector<std::uint32_t> order;
  order.reserve(gates.size());
  for (std::uint32_t i = 0; i < gates.size(); ++i)
    if (deps[i] == 0) order.push_back(i);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::uint32_t p : parents[order[h]])
      if (--deps[p] == 0) order.push_back(p);
  if (order.size() != gates.size()) throw Error(ErrorCode::CYCLE_DETECTED, "gate graph");
  return order;
}

ValidationReport validate(const Circuit& c) {
  ValidationReport rep;
  auto& gates = c.gates();
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.errors.push_back(msg);
  };
  if (c.output() >= gates.size()) fail("output gate index out of range");
  bool refs_ok = true;
  for (std::uint32_t i = 0; i < gates.size(); ++i) {
    auto& g = gates[i];
    if (has_children(g)) {
      if (g.l >= gates.size() || g.r >= gates.size()) {
        fail("BAD_FANIN: gate " + std::to_string(i) + " references a missing gate");
        refs_ok = false;
      }
    }
    if (g.kind == Gate::Kind::INPUT && g.var >= c.universe().size())
      fail("input gate " + std::to_string(i) + " outside universe");
  }
  if (refs_ok) {
    try {
      topological_order(gates);
    } catch (const Error&) {
      fail("CYCLE_DETECTED");
    }
  }
  if (rep.ok) {
    // reachability from output (dead gates are warnings, not errors)
    std::vector<bool> live(gates.size(), false);
    std::vector<std::uint32_t> stack{c.output()};
    live[c.output()] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      if (has_children(gates[i])) {
        for (std::uint32_t ch : {gates[i].l, gates[i].r})
          if (!live[ch]) {
            live[ch] = true;
            stack.push_back(ch);
          }
      }
    }
    std::size_t dead = std::count(live.begin(), live.end(), false);
    if (dead > 0)
      rep.warnings.push_back(std::to_string(dead) + " gate(s) unreachable from output");
  }
  return rep;
}

std::int64_t evaluate(const Circuit& c, const Valuation& v) {
  if (v.size() != c.universe().size())
    throw Error(ErrorCode::MISSING_VARIABLE, "valuation not total over circuit universe");
  auto& gates = c.gates();
  auto order = topological_order(gates);
  std::vector<std::int64_t> val(gates.size(), 0);
  for (std::uint32_t i : order) {
    auto& g = gates[i];
    switch (g.kind) {
      case Gate::Kind::INPUT: val[i] = v[g.var]; break;
      case Gate::Kind::CONST_ZERO: val[i] = 0; break;
      case Gate::Kind::EXTREMUM:
        val[i] = c.flavor() == SemiringFlavor::MAX_PLUS ? std::max(val[g.l], val[g.r])
                                                        : std::min(val[g.l], val[g.r]);
        break;
      case Gate::Kind::SUM: val[i] = checked_add(val[g.l], val[g.r]); break;
    }
  }
  return val[c.output()];
}

namespace {

std::vector<Polynomial> extract_gates(const Circuit& c, std::size_t cap, bool live_only) {
  auto& gates = c.gates();
  auto order = topological_order(gates);
  std::vector<bool> wanted(gates.size(), true);
  if (live_only) {
    std::fill(wanted.begin(), wanted.end(), false);
    std::vector<std::uint32_t> stack{c.output()};
    wanted[c.output()] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      if (has_children(gates[i]))
        for (std::uint32_t ch : {gates[i].l, gates[i].r})
          if (!wanted[ch]) {
            wanted[ch] = true;
            stack.push_back(ch);
          }
    }
  }
  std::vector<Polynomial> out(gates.size());
  std::size_t slots = 0;
  auto charge = [&](std::size_t n) {
    slots += n;
    if (slots > cap) throw Error(ErrorCode::CAP_EXCEEDED, "extraction budget");
  };
  for (std::uint32_t i : order) {
    if (!wanted[i]) continue;
    auto& g = gates[i];
    switch (g.kind) {
      case Gate::Kind::INPUT:
        out[i] = Polynomial({Monomial::variable(g.var)});
        break;
      case Gate::Kind::CONST_ZERO:
        out[i] = Polynomial({Monomial()});
        break;
      case Gate::Kind::EXTREMUM:
        out[i] = out[g.l].plus(out[g.r]);
        break;
      case Gate::Kind::SUM:
        charge(out[g.l].size() * out[g.r].size());
        out[i] = out[g.l].times(out[g.r]);
        break;
    }
    charge(out[i].size());
  }
  return out;
}

}  // namespace

Polynomial extract_polynomial(const Circuit& c, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::BAD_INPUT, "cap must be positive");
  return extract_gates(c, cap, /*live_only=*/true)[c.output()];
}

std::vector<Polynomial> extract_all_gates(const Circuit& c, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::BAD_INPUT, "cap must be positive");
  return extract_gates(c, cap, /*live_only=*/false);
}

bool calculates(const Circuit& c, const Polynomial& p, std::size_t cap) {
  Polynomial f = extract_polynomial(c, cap);
  if (!f.is_multilinear() || !p.is_multilinear())
    throw Error(ErrorCode::NOT_MULTILINEAR, "calculates");
  return poly_equiv(f, p);
}

std::string circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["flavor"] = c.flavor() == SemiringFlavor::MAX_PLUS ? "max" : "min";
  j["universe"] = c.universe().names();
  auto& jg = j["gates"] = nlohmann::json::array();
  for (auto& g : c.gates()) {
    switch (g.kind) {
      case Gate::Kind::INPUT:
        jg.push_back({{"op", "input"}, {"var", c.universe().name(g.var)}});
        break;
      case Gate::Kind::CONST_ZERO:
        jg.push_back({{"op", "const0"}});
        break;
      case Gate::Kind::EXTREMUM:
        jg.push_back({{"op", "ext"}, {"l", g.l}, {"r", g.r}});
        break;
      case Gate::Kind::SUM:
        jg.push_back({{"op", "sum"}, {"l", g.l}, {"r", g.r}});
        break;
    }
  }
  j["output"] = c.output();
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::string fl = j.at("flavor").get<std::string>();
  if (fl != "max" && fl != "min") throw Error(ErrorCode::BAD_INPUT, "flavor must be max or min");
  SemiringFlavor flavor = fl == "max" ? SemiringFlavor::MAX_PLUS : SemiringFlavor::MIN_PLUS;
  VarUniverse u(j.at("universe").get<std::vector<std::string>>());
  std::vector<Gate> gates;
  for (auto& jg : j.at("gates")) {
    std::string op = jg.at("op").get<std::string>();
    if (op == "input")
      gates.push_back({Gate::Kind::INPUT, u.id(jg.at("var").get<std::string>()), 0, 0});
    else if (op == "const0")
      gates.push_back({Gate::Kind::CONST_ZERO, 0, 0, 0});
    else if (op == "ext")
      gates.push_back({Gate::Kind::EXTREMUM, 0, jg.at("l").get<std::uint32_t>(),
                       jg.at("r").get<std::uint32_t>()});
    else if (op == "sum")
      gates.push_back({Gate::Kind::SUM, 0, jg.at("l").get<std::uint32_t>(),
                       jg.at("r").get<std::uint32_t>()});
    else
      throw Error(ErrorCode::BAD_INPUT, "unknown gate op: " + op);
  }
  std::uint32_t output = j.at("output").get<std::uint32_t>();
  if (output >= gates.size()) throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "output gate");
  for (auto& g : gates)
    if (has_children(g) && (g.l >= gates.size() || g.r >= gates.size()))
      throw Error(ErrorCode::BAD_FANIN, "gate references a missing gate");
  return Circuit(flavor, std::move(u),
                 std::make_shared<const std::vector<Gate>>(std::move(gates)), output);
}

std::string circuit_to_dot(const Circuit& c) {
  std::ostringstream os;
  os << "digraph circuit {\n  rankdir=BT;\n";
  for (std::uint32_t i = 0; i < c.gates().size(); ++i) {
    auto& g = c.gates()[i];
    os << "  g" << i << " [label=\"";
    switch (g.kind) {
      case Gate::Kind::INPUT: os << c.universe().name(g.var); break;
      case Gate::Kind::CONST_ZERO: os << "0"; break;
      case Gate::Kind::EXTREMUM:
        os << (c.flavor() == SemiringFlavor::MAX_PLUS ? "max" : "min");
        break;
      case Gate::Kind::SUM: os << "+"; break;
    }
    os << "\"";
    if (i == c.output()) os << ", shape=doublecircle";
    os << "];\n";
    if (has_children(g)) os << "  g" << g.l << " -> g" << i << ";\n  g" << g.r << " -> g" << i << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace tcw
