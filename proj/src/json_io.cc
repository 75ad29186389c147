// Copyright 2026 The abstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abstab/json_io.h"

#include <set>
#include <stdexcept>

namespace abstab {

namespace {

void fail(const std::string &where, const std::string &what) {
    throw std::invalid_argument(where + ": " + what);
}

const json &field(const json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

void check_object(const json &obj, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!ok.count(it.key())) {
            fail(where, "unknown field '" + it.key() + "'");
        }
    }
}

const json &array_field(const json &obj, const char *key, const std::string &where) {
    const json &a = field(obj, key, where);
    if (!a.is_array()) {
        fail(where, std::string("field '") + key + "' must be an array");
    }
    return a;
}

std::vector<Integer> integer_list(const json &a, const std::string &where) {
    if (!a.is_array()) {
        fail(where, "expected an array of integers");
    }
    std::vector<Integer> out;
    for (size_t i = 0; i < a.size(); i++) {
        out.push_back(integer_from_json(a[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

size_t index_from_json(const json &j, size_t bound, const std::string &where) {
    Integer v = integer_from_json(j, where);
    if (sgn(v) < 0 || v >= bound) {
        fail(where, "index " + to_string(v) + " out of range");
    }
    return v.get_ui();
}

IntMatrix matrix_from_json(const json &a, size_t rows, size_t cols, const std::string &where) {
    if (!a.is_array() || a.size() != rows) {
        fail(where, "matrix must have " + std::to_string(rows) + " rows");
    }
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        std::vector<Integer> row = integer_list(a[r], where + "[" + std::to_string(r) + "]");
        if (row.size() != cols) {
            fail(where, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        }
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = row[c];
        }
    }
    return m;
}

json matrix_to_json(const IntMatrix &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(integer_to_json(m.at(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

json moduli_to_json(const GroupSpec &g) {
    json a = json::array();
    for (const auto &d : g.moduli()) {
        a.push_back(integer_to_json(d));
    }
    return a;
}

std::string string_field(const json &obj, const char *key, const std::string &where) {
    const json &v = field(obj, key, where);
    if (!v.is_string()) {
        fail(where, std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

}  // namespace

json integer_to_json(const Integer &v) {
    return to_string(v);
}

Integer integer_from_json(const json &j, const std::string &where) {
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const std::invalid_argument &e) {
            fail(where, e.what());
        }
    }
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            return Integer(std::to_string(j.get<uint64_t>()));
        }
        return Integer(std::to_string(j.get<int64_t>()));
    }
    fail(where, "expected a decimal integer");
    return 0;
}

json element_to_json(const GroupElement &g) {
    json a = json::array();
    for (const auto &r : g.residues()) {
        a.push_back(integer_to_json(r));
    }
    return a;
}

GroupElement element_from_json(const json &j, const GroupSpec &group, const std::string &where) {
    std::vector<Integer> v = integer_list(j, where);
    if (v.size() != group.rank()) {
        fail(where, "element needs " + std::to_string(group.rank()) + " components");
    }
    return GroupElement(group, v);
}

json pauli_to_json(const PauliLabel &p) {
    json o;
    o["a"] = integer_to_json(p.phase);
    o["g"] = element_to_json(p.z);
    o["h"] = element_to_json(p.x);
    return o;
}

PauliLabel pauli_from_json(const json &j, const GroupSpec &group, const std::string &where) {
    check_object(j, {"a", "g", "h"}, where);
    return PauliLabel(integer_from_json(field(j, "a", where), where + ".a"),
                      element_from_json(field(j, "g", where), group, where + ".g"),
                      element_from_json(field(j, "h", where), group, where + ".h"));
}

json gate_to_json(const Gate &gate) {
    json o;
    if (auto *q = std::get_if<PartialQft>(&gate.kind)) {
        o["op"] = "qft";
        json f = json::array();
        for (size_t i : q->factors) {
            f.push_back(std::to_string(i));
        }
        o["factors"] = f;
        o["inverse"] = q->inverse;
    } else if (auto *q = std::get_if<Automorphism>(&gate.kind)) {
        o["op"] = "automorphism";
        o["matrix"] = matrix_to_json(q->forward.entries());
    } else if (auto *q = std::get_if<QuadraticPhase>(&gate.kind)) {
        o["op"] = "quadratic_phase";
        json diag = json::array(), dbl = json::array(), pair = json::array();
        const size_t m = gate.group.rank();
        for (size_t i = 0; i < m; i++) {
            diag.push_back(integer_to_json(q->xi.diag()[i]));
            dbl.push_back(integer_to_json(q->xi.doubled()[i]));
        }
        for (size_t i = 0; i < m; i++) {
            for (size_t j = i + 1; j < m; j++) {
                if (q->xi.beta(i, j) != 0) {
                    pair.push_back(json::array({std::to_string(i), std::to_string(j), to_string(q->xi.pair(i, j))}));
                }
            }
        }
        o["diag"] = diag;
        o["double"] = dbl;
        o["pair"] = pair;
    } else {
        const auto &p = std::get<PauliGate>(gate.kind).label;
        o["op"] = "pauli";
        o["a"] = integer_to_json(p.phase);
        o["g"] = element_to_json(p.z);
        o["h"] = element_to_json(p.x);
    }
    return o;
}

Gate gate_from_json(const json &j, const GroupSpec &group, const std::string &where) {
    std::string op = string_field(j, "op", where);
    const size_t m = group.rank();
    if (op == "qft") {
        check_object(j, {"op", "factors", "inverse", "if"}, where);
        std::vector<size_t> factors;
        const json &f = array_field(j, "factors", where);
        for (size_t i = 0; i < f.size(); i++) {
            factors.push_back(index_from_json(f[i], m, where + ".factors[" + std::to_string(i) + "]"));
        }
        bool inverse = false;
        if (j.contains("inverse")) {
            if (!j["inverse"].is_boolean()) {
                fail(where, "field 'inverse' must be a boolean");
            }
            inverse = j["inverse"].get<bool>();
        }
        return make_qft(group, factors, inverse);
    }
    if (op == "automorphism") {
        check_object(j, {"op", "matrix", "if"}, where);
        IntMatrix a = matrix_from_json(field(j, "matrix", where), m, m, where + ".matrix");
        return make_automorphism(validate_hom(a, group, group));
    }
    if (op == "quadratic_phase") {
        check_object(j, {"op", "diag", "double", "pair", "if"}, where);
        std::vector<Integer> diag = integer_list(field(j, "diag", where), where + ".diag");
        std::vector<Integer> dbl = integer_list(field(j, "double", where), where + ".double");
        if (diag.size() != m || dbl.size() != m) {
            fail(where, "diag and double need " + std::to_string(m) + " entries");
        }
        IntMatrix pair(m, m);
        for (size_t i = 0; i < m; i++) {
            for (size_t k = i + 1; k < m; k++) {
                pair.at(i, k) = diag[i] + diag[k];
            }
        }
        if (j.contains("pair")) {
            const json &p = j["pair"];
            if (!p.is_array()) {
                fail(where, "field 'pair' must be an array");
            }
            std::set<std::pair<size_t, size_t>> seen;
            for (size_t t = 0; t < p.size(); t++) {
                std::string w = where + ".pair[" + std::to_string(t) + "]";
                if (!p[t].is_array() || p[t].size() != 3) {
                    fail(w, "expected [i, j, value]");
                }
                size_t a = index_from_json(p[t][0], m, w);
                size_t b = index_from_json(p[t][1], m, w);
                if (a == b) {
                    fail(w, "pair entry needs two different factors");
                }
                if (a > b) {
                    std::swap(a, b);
                }
                if (!seen.insert({a, b}).second) {
                    fail(w, "pair entry listed twice");
                }
                pair.at(a, b) = integer_from_json(p[t][2], w);
            }
        }
        return make_quadratic_phase(QuadraticFunction::from_tables(group, diag, dbl, pair));
    }
    if (op == "pauli") {
        check_object(j, {"op", "a", "g", "h", "if"}, where);
        return make_pauli_gate(PauliLabel(integer_from_json(field(j, "a", where), where + ".a"),
                                          element_from_json(field(j, "g", where), group, where + ".g"),
                                          element_from_json(field(j, "h", where), group, where + ".h")));
    }
    fail(where, "unknown gate op '" + op + "'");
    throw std::logic_error("unreachable");
}

json program_to_json(const CircuitProgram &program) {
    json o;
    o["format"] = kCircuitFormat;
    o["group"] = moduli_to_json(program.group);
    o["input"] = element_to_json(program.input);
    json steps = json::array();
    for (const Step &step : program.steps) {
        if (auto *s = std::get_if<GateStep>(&step)) {
            json g = gate_to_json(s->gate);
            if (s->condition) {
                json c;
                c["register"] = s->condition->reg;
                c["equals"] = integer_to_json(s->condition->equals);
                g["if"] = c;
            }
            steps.push_back(g);
        } else if (auto *s = std::get_if<MeasureStep>(&step)) {
            json g;
            g["op"] = "measure";
            g["a"] = integer_to_json(s->pauli.phase);
            g["g"] = element_to_json(s->pauli.z);
            g["h"] = element_to_json(s->pauli.x);
            g["register"] = s->reg;
            steps.push_back(g);
        } else {
            const auto &c = std::get<CosetCorrectStep>(step);
            json g;
            g["op"] = "coset_correct";
            g["matrix"] = matrix_to_json(c.hom.entries());
            g["codomain"] = moduli_to_json(c.hom.codomain());
            g["target"] = element_to_json(c.target);
            g["sources"] = c.sources;
            steps.push_back(g);
        }
    }
    o["steps"] = steps;
    return o;
}

CircuitProgram program_from_json(const json &j) {
    const std::string where = "circuit";
    check_object(j, {"format", "group", "input", "steps"}, where);
    if (string_field(j, "format", where) != kCircuitFormat) {
        fail(where, std::string("unsupported format, expected '") + kCircuitFormat + "'");
    }
    GroupSpec group = make_group(integer_list(array_field(j, "group", where), where + ".group"));
    CircuitProgram p{group, GroupElement(group), {}};
    if (j.contains("input")) {
        p.input = element_from_json(j["input"], group, where + ".input");
    }
    const json &steps = array_field(j, "steps", where);
    for (size_t k = 0; k < steps.size(); k++) {
        std::string w = "step " + std::to_string(k);
        const json &s = steps[k];
        if (!s.is_object()) {
            fail(w, "expected an object");
        }
        std::string op = string_field(s, "op", w);
        if (op == "measure") {
            check_object(s, {"op", "a", "g", "h", "register"}, w);
            PauliLabel pauli(integer_from_json(field(s, "a", w), w + ".a"),
                             element_from_json(field(s, "g", w), group, w + ".g"),
                             element_from_json(field(s, "h", w), group, w + ".h"));
            p.steps.push_back(MeasureStep{pauli, string_field(s, "register", w)});
        } else if (op == "coset_correct") {
            check_object(s, {"op", "matrix", "codomain", "target", "sources"}, w);
            std::vector<Integer> target = integer_list(field(s, "target", w), w + ".target");
            if (target.size() > group.rank()) {
                fail(w, "target has too many components");
            }
            GroupSpec domain(std::vector<Integer>(group.moduli().begin(), group.moduli().begin() + target.size()));
            GroupSpec codomain(integer_list(array_field(s, "codomain", w), w + ".codomain"));
            IntMatrix m = matrix_from_json(field(s, "matrix", w), codomain.rank(), domain.rank(), w + ".matrix");
            const json &src = array_field(s, "sources", w);
            std::vector<std::string> sources;
            for (const auto &r : src) {
                if (!r.is_string()) {
                    fail(w, "sources must be register names");
                }
                sources.push_back(r.get<std::string>());
            }
            p.steps.push_back(CosetCorrectStep{validate_hom(m, domain, codomain), GroupElement(domain, target),
                                               std::move(sources)});
        } else {
            GateStep g{gate_from_json(s, group, w), std::nullopt};
            if (s.contains("if")) {
                const json &c = s["if"];
                check_object(c, {"register", "equals"}, w + ".if");
                g.condition = Condition{string_field(c, "register", w + ".if"),
                                        integer_from_json(field(c, "equals", w + ".if"), w + ".if.equals")};
            }
            p.steps.push_back(std::move(g));
        }
    }
    validate_program(p);
    return p;
}

CircuitProgram parse_program(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return program_from_json(j);
}

json normal_form_to_json(const NormalFormState &nf) {
    json o;
    o["offset"] = element_to_json(nf.offset);
    json xs = json::array();
    json ws = json::array();
    for (size_t k = 0; k < nf.x_parts.size(); k++) {
        xs.push_back(element_to_json(nf.x_parts.gens[k]));
        ws.push_back(pauli_to_json(nf.witnesses[k]));
    }
    o["x_parts"] = xs;
    o["witnesses"] = ws;
    o["support_size"] = integer_to_json(nf.support_size);
    return o;
}

json transcript_to_json(const RunTranscript &t) {
    json o;
    o["seed"] = std::to_string(t.seed);
    json recs = json::array();
    for (const auto &r : t.records) {
        json e;
        e["register"] = r.reg;
        e["k"] = integer_to_json(r.outcome);
        e["prob_num"] = integer_to_json(r.probability.num);
        e["prob_den"] = integer_to_json(r.probability.den);
        if (r.diagonal) {
            // gamma^k = exp(2 pi i y / d), y / d in lowest terms.
            const Integer &two_g = t.final_stabilizer.group.phase_modulus();
            Integer g = gcd(r.outcome, two_g);
            json w;
            w["y"] = integer_to_json(r.outcome / g);
            w["d"] = integer_to_json(two_g / g);
            e["omega"] = w;
        }
        recs.push_back(e);
    }
    o["records"] = recs;
    o["final"] = normal_form_to_json(t.final_state);
    return o;
}

LinearSystem system_from_json(const json &j) {
    const std::string where = "system";
    check_object(j, {"format", "domain", "codomain", "matrix", "b"}, where);
    if (string_field(j, "format", where) != kSystemFormat) {
        fail(where, std::string("unsupported format, expected '") + kSystemFormat + "'");
    }
    GroupSpec domain(integer_list(array_field(j, "domain", where), where + ".domain"));
    GroupSpec codomain(integer_list(array_field(j, "codomain", where), where + ".codomain"));
    IntMatrix m = matrix_from_json(field(j, "matrix", where), codomain.rank(), domain.rank(), where + ".matrix");
    HomMatrix hom = validate_hom(m, domain, codomain);
    GroupElement b = element_from_json(field(j, "b", where), codomain, where + ".b");
    return LinearSystem{std::move(hom), std::move(b)};
}

json solution_to_json(const SolveReport &r) {
    json o;
    o["solvable"] = r.solution.has_value();
    o["count"] = integer_to_json(r.count);
    if (r.solution) {
        o["particular"] = element_to_json(r.solution->particular);
        json k = json::array();
        for (const auto &g : r.solution->kernel.gens) {
            k.push_back(element_to_json(g));
        }
        o["kernel"] = k;
    }
    return o;
}

}  // namespace abstab
