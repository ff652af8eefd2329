#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cmlab/circuit.hpp>
#include <cmlab/circuit_io.hpp>

using namespace cmlab;

namespace {

Circuit and2() {
    Circuit c;
    c.input_count = 2;
    c.gates = {Gate::input(0), Gate::input(1), Gate::and_of({0, 1})};
    c.outputs = {2};
    return c;
}

Circuit identity1() {
    Circuit c;
    c.input_count = 1;
    c.gates = {Gate::input(0)};
    c.outputs = {0};
    return c;
}

Circuit not1() {
    Circuit c;
    c.input_count = 1;
    c.gates = {Gate::input(0), Gate::not_of(0)};
    c.outputs = {1};
    return c;
}

}  // namespace

TEST_CASE("evaluate basic gates") {
    Circuit c = and2();
    CHECK(c.evaluate(BitString{1, 1}) == BitString{1});
    CHECK(c.evaluate(BitString{1, 0}) == BitString{0});
    CHECK(identity1().evaluate(BitString{0}) == BitString{0});
    CHECK(identity1().evaluate(BitString{1}) == BitString{1});
    CHECK_THROWS_AS(c.evaluate(BitString{1}), std::invalid_argument);
}

TEST_CASE("evaluate is deterministic") {
    Circuit c = and2();
    for (int t = 0; t < 4; ++t) CHECK(c.evaluate(BitString{1, 1}) == BitString{1});
}

TEST_CASE("size counts all vertices") {
    // n-ary AND over n inputs: n input vertices plus the gate
    for (std::uint32_t n : {2u, 5u, 9u}) {
        Circuit c;
        c.input_count = n;
        std::vector<std::uint32_t> args;
        for (std::uint32_t i = 0; i < n; ++i) {
            c.gates.push_back(Gate::input(i));
            args.push_back(i);
        }
        c.gates.push_back(Gate::and_of(args));
        c.outputs = {n};
        CHECK(c.size() == n + 1);
        CHECK(c.depth() == 1);
    }
    CHECK(identity1().size() == 1);
    CHECK(identity1().depth() == 0);

    // 3 inputs + NOT + AND = 5 vertices
    Circuit c;
    c.input_count = 3;
    c.gates = {Gate::input(0), Gate::input(1), Gate::input(2), Gate::not_of(2),
               Gate::and_of({0, 1, 3})};
    c.outputs = {4};
    CHECK(c.size() == 5);
    CHECK(c.depth() == 2);  // NOT(AND) chain counted in edges
}

TEST_CASE("depth counts edges") {
    Circuit c;  // NOT(AND(x1,x2))
    c.input_count = 2;
    c.gates = {Gate::input(0), Gate::input(1), Gate::and_of({0, 1}), Gate::not_of(2)};
    c.outputs = {3};
    CHECK(c.depth() == 2);
}

TEST_CASE("validate flags malformed circuits") {
    CHECK(validate(and2()).empty());

    Circuit fwd = and2();
    fwd.gates[2] = Gate::and_of({0, 3});  // forward reference
    CHECK_FALSE(validate(fwd).empty());

    Circuit arity = and2();
    arity.gates[2] = Gate{GateKind::Not, 0, {0, 1}};  // NOT with 2 args
    CHECK_FALSE(validate(arity).empty());

    Circuit dup;  // same input position twice
    dup.input_count = 2;
    dup.gates = {Gate::input(0), Gate::input(0)};
    dup.outputs = {1};
    CHECK_FALSE(validate(dup).empty());

    Circuit badout = and2();
    badout.outputs = {9};
    CHECK_FALSE(validate(badout).empty());
}

TEST_CASE("compose rewires inner outputs into outer inputs") {
    Circuit c = compose(and2(), {identity1(), identity1()});
    REQUIRE(validate(c).empty());
    for (int x = 0; x < 4; ++x) {
        BitString in{(x >> 1) & 1, x & 1};
        CHECK(c.evaluate(in) == and2().evaluate(in));
    }

    Circuit dn = compose(not1(), {not1()});
    REQUIRE(validate(dn).empty());
    CHECK(dn.evaluate(BitString{0}) == BitString{0});
    CHECK(dn.evaluate(BitString{1}) == BitString{1});

    CHECK_THROWS_AS(compose(and2(), {identity1()}), std::invalid_argument);
}

TEST_CASE("compose respects size and depth bounds on random circuits") {
    std::mt19937_64 rng(29);
    auto random_circuit = [&](std::uint32_t inputs, std::uint32_t outputs) {
        Circuit c;
        c.input_count = inputs;
        for (std::uint32_t i = 0; i < inputs; ++i) c.gates.push_back(Gate::input(i));
        std::uint32_t extra = 2 + rng() % 6;
        for (std::uint32_t g = 0; g < extra; ++g) {
            std::uint32_t n = static_cast<std::uint32_t>(c.gates.size());
            switch (rng() % 3) {
                case 0: c.gates.push_back(Gate::not_of(rng() % n)); break;
                case 1: c.gates.push_back(Gate::and_of({static_cast<std::uint32_t>(rng() % n),
                                                        static_cast<std::uint32_t>(rng() % n)})); break;
                default: c.gates.push_back(Gate::or_of({static_cast<std::uint32_t>(rng() % n),
                                                        static_cast<std::uint32_t>(rng() % n)})); break;
            }
        }
        for (std::uint32_t o = 0; o < outputs; ++o)
            c.outputs.push_back(rng() % c.gates.size());
        return c;
    };

    for (int t = 0; t < 50; ++t) {
        std::uint32_t k = 1 + rng() % 3;
        std::vector<Circuit> inners;
        std::uint32_t total_out = 0;
        std::size_t inner_size = 0, inner_depth = 0;
        std::uint32_t total_in = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t ni = 1 + rng() % 3, no = 1 + rng() % 3;
            inners.push_back(random_circuit(ni, no));
            total_out += no;
            total_in += ni;
            inner_size += inners.back().size();
            inner_depth = std::max(inner_depth, inners.back().depth());
        }
        Circuit outer = random_circuit(total_out, 1 + rng() % 3);
        Circuit comp = compose(outer, inners);
        REQUIRE(validate(comp).empty());
        CHECK(comp.size() <= inner_size + outer.size());
        CHECK(comp.depth() <= inner_depth + outer.depth());

        // semantics: composed output equals outer applied to inner outputs
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << total_in); ++x) {
            BitString in = BitString::from_int(x, total_in);
            BitString glued(0);
            std::size_t off = 0;
            for (const Circuit& ic : inners) {
                glued = concat(glued, ic.evaluate(in.slice(off, ic.input_count)));
                off += ic.input_count;
            }
            CHECK(comp.evaluate(in) == outer.evaluate(glued));
        }
    }
}

TEST_CASE("json round trip") {
    Circuit c = and2();
    Circuit back = decode(encode(c));
    CHECK(back.input_count == c.input_count);
    CHECK(back.outputs == c.outputs);
    REQUIRE(back.gates.size() == c.gates.size());
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].kind == c.gates[i].kind);
        CHECK(back.gates[i].aux == c.gates[i].aux);
        CHECK(back.gates[i].args == c.gates[i].args);
    }
}

TEST_CASE("decode rejects bad input") {
    CHECK_THROWS_WITH(decode("{\"inputs\":1,\"gates\":[{\"id\":0,\"kind\":\"XAND\",\"args\":[]}],\"outputs\":[0]}"),
                      Catch::Matchers::ContainsSubstring("unknown kind"));
    CHECK_THROWS(decode("not json"));
    CHECK_THROWS(decode("{}"));
    // structurally invalid: forward reference
    CHECK_THROWS_WITH(
        decode("{\"inputs\":1,\"gates\":[{\"id\":0,\"kind\":\"NOT\",\"args\":[1]},"
               "{\"id\":1,\"kind\":\"INPUT\",\"pos\":0,\"args\":[]}],\"outputs\":[0]}"),
        Catch::Matchers::ContainsSubstring("invalid circuit"));
}
