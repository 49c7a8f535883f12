#include "qroute/circuit.hpp"
#include "qroute/generators.hpp"
#include "qroute/qasm.hpp"
#include "qroute/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

using namespace qroute;

TEST_SUITE_BEGIN("circuit");

TEST_CASE("gate factories enforce arity and parameters") {
  CHECK_THROWS_AS((void)Gate::one_q(GateKind::CX, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)Gate::two_q(GateKind::H, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)Gate::two_q(GateKind::CX, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)Gate::cp(2, 2, 0.5), std::invalid_argument);

  Circuit c(2);
  CHECK_THROWS_AS(c.append(Gate::one_q(GateKind::H, 2)), std::invalid_argument);
  CHECK_THROWS_AS(c.append(Gate{GateKind::H, 0, -1, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(c.append(Gate{GateKind::H, 0, 1, 0.0}), std::invalid_argument);
  c.append(Gate::cp(0, 1, 0.25));
  CHECK(c.size() == 1);
}

TEST_CASE("parse_qasm handles the basic forms") {
  SUBCASE("two gates") {
    const auto c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n");
    REQUIRE(c.num_qubits() == 2);
    REQUIRE(c.size() == 2);
    CHECK(c.gate(0) == Gate::one_q(GateKind::H, 0));
    CHECK(c.gate(1) == Gate::two_q(GateKind::CX, 0, 1));
  }
  SUBCASE("empty body") {
    const auto c = parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[4];\n");
    CHECK(c.num_qubits() == 4);
    CHECK(c.empty());
  }
  SUBCASE("comments and angles") {
    const auto c = parse_qasm(
        "OPENQASM 2.0;\n// a comment\nqreg r[3];\n"
        "cp(pi/4) r[0],r[2];\ncp(-0.5) r[1],r[2];\ncp(3*pi/4) r[0],r[1];\n");
    REQUIRE(c.size() == 3);
    CHECK(c.gate(0).param == doctest::Approx(0.7853981633974483).epsilon(1e-15));
    CHECK(c.gate(1).param == doctest::Approx(-0.5));
    CHECK(c.gate(2).param == doctest::Approx(2.356194490192345).epsilon(1e-15));
  }
  SUBCASE("measure and barrier are skipped with a warning") {
    std::vector<std::string> warnings;
    const auto c = parse_qasm(
        "OPENQASM 2.0;\nqreg q[2];\ncreg c[2];\nh q[0];\nbarrier q[0],q[1];\n"
        "measure q[0] -> c[0];\n",
        &warnings);
    CHECK(c.size() == 1);
    CHECK(warnings.size() == 2);
  }
}

TEST_CASE("parse_qasm rejects what the subset excludes") {
  CHECK_THROWS_WITH_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];\n"),
                       doctest::Contains("3-qubit gate unsupported"), QasmParseError);
  CHECK_THROWS_WITH_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[2];\nrz(0.1) q[0];\n"),
                       doctest::Contains("unsupported gate name"), QasmParseError);
  CHECK_THROWS_WITH_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[2];\nqreg r[2];\n"),
                       doctest::Contains("multiple quantum registers"), QasmParseError);
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 2.0;\nqreg q[2];\nif (c == 1) x q[0];\n"),
                  QasmParseError);
  CHECK_THROWS_AS((void)parse_qasm("OPENQASM 3.0;\nqreg q[2];\n"), QasmParseError);

  // Position annotation: the offending token's line is reported.
  try {
    (void)parse_qasm("OPENQASM 2.0;\nqreg q[2];\nh q[0]\ncx q[0],q[1];\n");
    FAIL("expected parse error");
  } catch (const QasmParseError& e) {
    CHECK(e.line() == 4);  // missing ';' discovered at the next statement
  }
}

TEST_CASE("serialize_qasm emits the documented forms") {
  Circuit c(2);
  c.append(Gate::two_q(GateKind::CX, 0, 1));
  const std::string text = serialize_qasm(c);
  CHECK(text.find("cx q[0],q[1];") != std::string::npos);

  Circuit s(3);
  s.append(Gate::two_q(GateKind::Swap, 1, 2));
  CHECK(serialize_qasm(s).find("swap q[1],q[2];") != std::string::npos);
}

TEST_CASE("round-trip: parse(serialize(c)) == c for generated circuits") {
  const auto roundtrip = [](const Circuit& c) {
    const Circuit back = parse_qasm(serialize_qasm(c));
    CHECK(back == c);
  };
  roundtrip(gen_qft(8));
  roundtrip(gen_cuccaro_adder(3));
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    roundtrip(gen_random(9, 15, 0.4, seed));
    roundtrip(gen_quantum_volume(7, 6, seed));
  }
  // Serialization itself is byte-deterministic.
  CHECK(serialize_qasm(gen_qft(8)) == serialize_qasm(gen_qft(8)));
}

TEST_CASE("gen_random shapes and determinism") {
  SUBCASE("two qubits, forced two-qubit fraction") {
    const auto c = gen_random(2, 1, 1.0, 123);
    REQUIRE(c.size() == 1);
    CHECK(c.gate(0).kind == GateKind::CX);
    CHECK(((c.gate(0).q0 == 0 && c.gate(0).q1 == 1) || (c.gate(0).q0 == 1 && c.gate(0).q1 == 0)));
  }
  SUBCASE("determinism") {
    CHECK(gen_random(16, 40, 0.5, 7) == gen_random(16, 40, 0.5, 7));
    CHECK(gen_random(16, 40, 0.5, 7) != gen_random(16, 40, 0.5, 8));
  }
  SUBCASE("gate count stays in the frozen band") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto c = gen_random(16, 40, 0.5, seed);
      CHECK(c.size() >= 40 * 4);
      CHECK(c.size() <= 40 * 12);
    }
  }
  SUBCASE("odd qubit count still covers every slot") {
    const auto c = gen_random(5, 10, 0.5, 3);
    CHECK(c.size() == 10 * 3);  // two pair slots + the odd qubit out
  }
}

TEST_CASE("gen_qft counts follow n(n+1)/2") {
  const auto base = gen_qft(1);
  REQUIRE(base.size() == 1);
  CHECK(base.gate(0) == Gate::one_q(GateKind::H, 0));

  const auto four = gen_qft(4);
  CHECK(four.size() == 10);
  CHECK(std::count_if(four.gates().begin(), four.gates().end(),
                      [](const Gate& g) { return g.kind == GateKind::H; }) == 4);
  CHECK(std::count_if(four.gates().begin(), four.gates().end(),
                      [](const Gate& g) { return g.kind == GateKind::CP; }) == 6);

  CHECK(gen_qft(32).size() == 528);
  for (int n = 1; n <= 64; ++n) {
    CHECK(gen_qft(n).size() == static_cast<std::size_t>(n) * (n + 1) / 2);
  }
}

TEST_CASE("gen_quantum_volume pairing counts") {
  const auto tiny = gen_quantum_volume(2, 3, 99);
  REQUIRE(tiny.size() == 3);
  for (const Gate& g : tiny.gates()) {
    CHECK(g.kind == GateKind::Generic2Q);
    CHECK(std::min(g.q0, g.q1) == 0);
    CHECK(std::max(g.q0, g.q1) == 1);
  }
  CHECK(gen_quantum_volume(5, 4, 1).size() == 4 * 2);
  CHECK(gen_quantum_volume(6, 4, 5) == gen_quantum_volume(6, 4, 5));
}

TEST_CASE("adder qubit counts") {
  CHECK(gen_cuccaro_adder(1).num_qubits() == 4);
  CHECK(gen_cuccaro_adder(6).num_qubits() == 14);
}

TEST_CASE("all generator outputs are pure 1q/2q gates") {
  const auto all_simple = [](const Circuit& c) {
    return std::all_of(c.gates().begin(), c.gates().end(), [&](const Gate& g) {
      const bool in_range = g.q0 >= 0 && g.q0 < c.num_qubits() &&
                            (!g.two_qubit() || (g.q1 >= 0 && g.q1 < c.num_qubits() && g.q0 != g.q1));
      return in_range;
    });
  };
  CHECK(all_simple(gen_random(11, 20, 0.7, 2)));
  CHECK(all_simple(gen_qft(12)));
  CHECK(all_simple(gen_quantum_volume(9, 9, 4)));
  CHECK(all_simple(gen_cuccaro_adder(5)));
}

namespace {

/// Simulates the adder on basis inputs and reads back the (sum, carry)
/// registers. The final state must be a single basis state.
std::pair<unsigned, unsigned> run_adder(int bits, unsigned a, unsigned b, unsigned carry_in) {
  Circuit c(2 * bits + 2);
  if (carry_in) c.append(Gate::one_q(GateKind::X, adder_carry_in()));
  for (int i = 0; i < bits; ++i) {
    if ((a >> i) & 1U) c.append(Gate::one_q(GateKind::X, adder_a(i)));
    if ((b >> i) & 1U) c.append(Gate::one_q(GateKind::X, adder_b(i)));
  }
  const Circuit adder = gen_cuccaro_adder(bits);
  for (const Gate& g : adder.gates()) c.append(g);

  const auto state = simulate(c);
  std::size_t best = 0;
  for (std::size_t i = 1; i < state.size(); ++i) {
    if (std::abs(state[i]) > std::abs(state[best])) best = i;
  }
  REQUIRE(std::norm(state[best]) == doctest::Approx(1.0).epsilon(1e-9));

  unsigned sum = 0;
  for (int i = 0; i < bits; ++i) sum |= ((best >> adder_b(i)) & 1U) << i;
  const unsigned carry = (best >> adder_carry_out(bits)) & 1U;
  // a and the carry-in must be restored.
  unsigned a_out = 0;
  for (int i = 0; i < bits; ++i) a_out |= ((best >> adder_a(i)) & 1U) << i;
  CHECK(a_out == a);
  CHECK(((best >> adder_carry_in()) & 1U) == carry_in);
  return {sum, carry};
}

}  // namespace

TEST_CASE("adder computes a + b exhaustively for bits <= 3") {
  {
    const auto [sum, carry] = run_adder(2, 1, 2, 0);
    CHECK(sum == 3);
    CHECK(carry == 0);
  }
  for (int bits = 1; bits <= 3; ++bits) {
    const unsigned span = 1U << bits;
    for (unsigned a = 0; a < span; ++a) {
      for (unsigned b = 0; b < span; ++b) {
        for (unsigned cin = 0; cin <= 1; ++cin) {
          const auto [sum, carry] = run_adder(bits, a, b, cin);
          const unsigned total = a + b + cin;
          CHECK(sum == (total & (span - 1)));
          CHECK(carry == (total >> bits));
        }
      }
    }
  }
}

TEST_SUITE_END();
