#include "dqc/decompose.hpp"

#include "dqc/errors.hpp"

namespace dqc {

namespace {

Gate g1(const char* name, QubitId q) { return Gate{name, {q}, {}}; }
Gate g1p(const char* name, QubitId q, double p) { return Gate{name, {q}, {p}}; }
Gate gcx(QubitId c, QubitId t) { return Gate{"cx", {c, t}, {}}; }

void expand(const Gate& gate, std::vector<Gate>& out) {
  if (gate.qubits.size() == 1 || gate.name == "cx") {
    out.push_back(gate);
    return;
  }
  const auto& q = gate.qubits;
  const auto& p = gate.params;
  if (gate.name == "cp" || gate.name == "cu1") {
    double l = p.at(0);
    out.push_back(g1p("p", q[0], l / 2));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p("p", q[1], -l / 2));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p("p", q[1], l / 2));
  } else if (gate.name == "crz") {
    double l = p.at(0);
    out.push_back(g1p("rz", q[1], l / 2));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p("rz", q[1], -l / 2));
    out.push_back(gcx(q[0], q[1]));
  } else if (gate.name == "cz") {
    out.push_back(g1("h", q[1]));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1("h", q[1]));
  } else if (gate.name == "cy") {
    out.push_back(g1("sdg", q[1]));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1("s", q[1]));
  } else if (gate.name == "swap") {
    out.push_back(gcx(q[0], q[1]));
    out.push_back(gcx(q[1], q[0]));
    out.push_back(gcx(q[0], q[1]));
  } else if (gate.name == "ch") {
    out.push_back(g1("s", q[1]));
    out.push_back(g1("h", q[1]));
    out.push_back(g1("t", q[1]));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1("tdg", q[1]));
    out.push_back(g1("h", q[1]));
    out.push_back(g1("sdg", q[1]));
  } else if (gate.name == "rzz") {
    double l = p.at(0);
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p("rz", q[1], l));
    out.push_back(gcx(q[0], q[1]));
  } else if (gate.name == "rxx") {
    double l = p.at(0);
    out.push_back(g1("h", q[0]));
    out.push_back(g1("h", q[1]));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p("rz", q[1], l));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1("h", q[0]));
    out.push_back(g1("h", q[1]));
  } else if (gate.name == "crx" || gate.name == "cry") {
    // c-R(theta) = (I ⊗ R(theta/2)) cx (I ⊗ R(-theta/2)) cx
    const char* rot = gate.name == "crx" ? "rx" : "ry";
    double l = p.at(0);
    out.push_back(g1p(rot, q[1], l / 2));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(g1p(rot, q[1], -l / 2));
    out.push_back(gcx(q[0], q[1]));
  } else if (gate.name == "cu3" || gate.name == "cu") {
    double theta = p.at(0), phi = p.at(1), lambda = p.at(2);
    if (gate.name == "cu") out.push_back(g1p("p", q[0], p.at(3)));
    out.push_back(g1p("p", q[0], (lambda + phi) / 2));
    out.push_back(g1p("p", q[1], (lambda - phi) / 2));
    out.push_back(gcx(q[0], q[1]));
    out.push_back(Gate{"u", {q[1]}, {-theta / 2, 0.0, -(phi + lambda) / 2}});
    out.push_back(gcx(q[0], q[1]));
    out.push_back(Gate{"u", {q[1]}, {theta / 2, phi, 0.0}});
  } else if (gate.name == "ccx") {
    QubitId a = q[0], b = q[1], c = q[2];
    out.push_back(g1("h", c));
    out.push_back(gcx(b, c));
    out.push_back(g1("tdg", c));
    out.push_back(gcx(a, c));
    out.push_back(g1("t", c));
    out.push_back(gcx(b, c));
    out.push_back(g1("tdg", c));
    out.push_back(gcx(a, c));
    out.push_back(g1("t", b));
    out.push_back(g1("t", c));
    out.push_back(g1("h", c));
    out.push_back(gcx(a, b));
    out.push_back(g1("t", a));
    out.push_back(g1("tdg", b));
    out.push_back(gcx(a, b));
  } else if (gate.name == "cswap") {
    // cswap a,b,c = cx c,b; ccx a,b,c; cx c,b
    out.push_back(gcx(q[2], q[1]));
    expand(Gate{"ccx", {q[0], q[1], q[2]}, {}}, out);
    out.push_back(gcx(q[2], q[1]));
  } else {
    throw structural_error("no expansion known for gate '" + gate.name + "'");
  }
}

} // namespace

std::vector<Gate> decompose_to_basis(const std::vector<Gate>& gates, Basis basis) {
  (void)basis; // single basis today
  std::vector<Gate> out;
  out.reserve(gates.size() * 2);
  for (const Gate& gate : gates) expand(gate, out);
  return out;
}

} // namespace dqc
