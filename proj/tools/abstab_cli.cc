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

// Command line front end. Every output line is one JSON object.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "abstab/json_io.h"
#include "abstab/selftest.h"

using namespace abstab;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json read_json(const std::string &path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

uint64_t default_seed() {
    const char *env = std::getenv("ABSTAB_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    Integer v = parse_integer(env);
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        throw std::invalid_argument("ABSTAB_SEED must be an unsigned 64-bit integer");
    }
    return std::stoull(env);
}

std::vector<Integer> parse_list(const std::string &text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_integer(item));
    }
    return out;
}

void emit(const json &j) {
    std::cout << j.dump() << "\n";
}

json distribution_lines(const OutcomeDistribution &d, const std::string &reg) {
    json o;
    o["register"] = reg;
    o["modulus"] = integer_to_json(d.modulus());
    o["base"] = integer_to_json(d.base());
    o["step"] = integer_to_json(d.step());
    o["count"] = integer_to_json(d.count());
    return o;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"abstab: stabilizer simulation over finite abelian groups"};
    app.require_subcommand(1);

    std::string file;
    uint64_t shots = 1;
    std::optional<uint64_t> seed_opt;
    std::string reg;
    std::vector<std::string> given;
    std::string element;
    uint64_t max_order = 32;
    uint64_t trials = 50;
    std::string group_text, subgroup_text, coset_text;

    auto *sim = app.add_subcommand("simulate", "run shots and print one transcript per line");
    sim->add_option("file", file, "circuit file")->required();
    sim->add_option("--shots", shots, "number of shots");
    sim->add_option("--seed", seed_opt, "base seed (default: $ABSTAB_SEED or 0)");

    auto *dist = app.add_subcommand("distribution", "exact outcome distribution of one register");
    dist->add_option("file", file, "circuit file")->required();
    dist->add_option("--register", reg, "register name")->required();
    dist->add_option("--given", given, "earlier outcomes as name=k");

    auto *amp = app.add_subcommand("amplitude", "amplitude of the final state at one element");
    amp->add_option("file", file, "circuit file")->required();
    amp->add_option("--element", element, "comma separated residues")->required();
    amp->add_option("--seed", seed_opt, "seed for measurement outcomes");

    auto *nf = app.add_subcommand("normalform", "normal form of the final state");
    nf->add_option("file", file, "circuit file")->required();
    nf->add_option("--seed", seed_opt, "seed for measurement outcomes");

    auto *slv = app.add_subcommand("solve", "solve a linear system over finite abelian groups");
    slv->add_option("file", file, "system file")->required();

    auto *st = app.add_subcommand("selftest", "compare against brute force and the dense oracle");
    st->add_option("--max-order", max_order, "largest group order tried");
    st->add_option("--trials", trials, "instances per check");
    st->add_option("--seed", seed_opt, "seed");

    auto *cp = app.add_subcommand("coset", "print a program preparing a coset state");
    cp->add_option("--group", group_text, "moduli, comma separated")->required();
    cp->add_option("--subgroup", subgroup_text, "generators separated by ';', residues by ','");
    cp->add_option("--coset", coset_text, "coset representative");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        json err;
        err["error"] = e.what();
        emit(err);
        return 1;
    }

    try {
        uint64_t seed = seed_opt ? *seed_opt : default_seed();
        if (*sim) {
            CircuitProgram p = parse_program(read_file(file));
            for (uint64_t s = 0; s < shots; s++) {
                emit(transcript_to_json(run(p, shot_seed(seed, s))));
            }
        } else if (*dist) {
            CircuitProgram p = parse_program(read_file(file));
            std::map<std::string, Integer> prior;
            for (const auto &g : given) {
                auto eq = g.find('=');
                if (eq == std::string::npos) {
                    throw std::invalid_argument("--given expects name=k, got '" + g + "'");
                }
                prior[g.substr(0, eq)] = parse_integer(g.substr(eq + 1));
            }
            OutcomeDistribution d = exact_distribution(p, reg, prior);
            if (d.count() <= 4096) {
                for (const auto &[k, prob] : d.entries()) {
                    json o;
                    o["k"] = integer_to_json(k);
                    o["prob_num"] = integer_to_json(prob.num);
                    o["prob_den"] = integer_to_json(prob.den);
                    emit(o);
                }
            } else {
                emit(distribution_lines(d, reg));
            }
        } else if (*amp) {
            CircuitProgram p = parse_program(read_file(file));
            RunTranscript t = run(p, seed);
            GroupElement g(p.group, parse_list(element));
            auto ph = amplitude(t.final_state, g);
            json o;
            if (ph) {
                o["phase_exp"] = integer_to_json(*ph);
                o["mag2_num"] = "1";
                o["mag2_den"] = integer_to_json(t.final_state.support_size);
            } else {
                o["phase_exp"] = nullptr;
                o["mag2_num"] = "0";
                o["mag2_den"] = "1";
            }
            emit(o);
        } else if (*nf) {
            CircuitProgram p = parse_program(read_file(file));
            emit(normal_form_to_json(run(p, seed).final_state));
        } else if (*slv) {
            LinearSystem sys = system_from_json(read_json(file));
            emit(solution_to_json(solve_report(sys.hom, sys.rhs)));
        } else if (*st) {
            bool ok = true;
            for (const auto &r : run_selftest(max_order, seed, trials)) {
                json o;
                o["check"] = r.name;
                o["trials"] = r.trials;
                o["failures"] = r.failures;
                o["pass"] = r.passed();
                if (!r.passed()) {
                    o["first_failure"] = r.first_failure;
                }
                ok = ok && r.passed();
                emit(o);
            }
            return ok ? 0 : 1;
        } else if (*cp) {
            GroupSpec G = make_group(parse_list(group_text));
            SubgroupGens H(G);
            std::stringstream ss(subgroup_text);
            std::string item;
            while (std::getline(ss, item, ';')) {
                if (!item.empty()) {
                    H.gens.emplace_back(G, parse_list(item));
                }
            }
            GroupElement x = coset_text.empty() ? GroupElement(G) : GroupElement(G, parse_list(coset_text));
            emit(program_to_json(coset_prepare(H, x)));
        }
    } catch (const std::exception &e) {
        json err;
        err["error"] = e.what();
        emit(err);
        return 1;
    }
    return 0;
}
