/*
 * Copyright 2026 The linesect authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linesect/autgroup.hpp"
#include "linesect/json_io.hpp"
#include "linesect/nets.hpp"
#include "linesect/pencils.hpp"
#include "linesect/polar.hpp"

namespace {

using namespace linesect;

constexpr int kExitOk = 0;
constexpr int kExitOperational = 1;
constexpr int kExitMismatch = 2;

struct MathMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    Json j;
    in >> j;
    return j;
}

/// Expected group dimension for general sections, per the survey table:
/// closed forms for l = 1 and l = 2, the two exceptional net values, zero
/// elsewhere.
long expected_aut_dim(std::size_t n, std::size_t l) {
    if (l == 1) return static_cast<long>((n * n + 3 * n + 2) / 2);
    if (l == 2)
        return n % 2 == 0 ? static_cast<long>(n + 4)
                          : static_cast<long>(3 * (n + 1) / 2);
    if (n == 4 && l == 3) return 3;
    if (n == 5 && l == 3) return 1;
    return 0;
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t n, std::size_t l,
                        int sample) {
    return seed * 1000003ULL + n * 101ULL + l * 13ULL +
           static_cast<std::uint64_t>(sample);
}

Json report_to_json(const AutReport& r) {
    return Json{{"N", r.N},
                {"l", r.l},
                {"aut_dim", r.aut_dim},
                {"section_dim", r.section_dim},
                {"sample_line_stab_dim", r.sample_line_stab_dim},
                {"orbit_dim", r.orbit_dim},
                {"verdict", r.verdict},
                {"seed", r.seed},
                {"samples", r.samples}};
}

int cmd_scan(std::uint64_t seed, int samples, std::size_t max_n, long bound,
             const std::string& output, const std::string& format) {
    Json cells = Json::array();
    std::ostringstream csv;
    csv << "N,l,sample,aut_dim,expected\n";
    for (std::size_t n = 4; n <= max_n; ++n)
        for (std::size_t l = 1; l + 5 <= 2 * n; ++l) {
            const long want = expected_aut_dim(n, l);
            for (int k = 0; k < samples; ++k) {
                Rng rng(cell_seed(seed, n, l, k));
                const SectionSpec s = general_section(rng, n, l, bound);
                const long dim = infinitesimal_aut_dim(s);
                cells.push_back(Json{{"N", n},
                                     {"l", l},
                                     {"sample", k},
                                     {"seed", cell_seed(seed, n, l, k)},
                                     {"aut_dim", dim},
                                     {"expected", want}});
                csv << n << "," << l << "," << k << "," << dim << "," << want
                    << "\n";
                if (dim != want)
                    throw MathMismatch(
                        "scan: dimension mismatch at N=" + std::to_string(n) +
                        ", l=" + std::to_string(l) + ": got " +
                        std::to_string(dim) + ", expected " +
                        std::to_string(want));
            }
        }
    if (format == "csv")
        write_output(csv.str(), output);
    else
        write_output(cells.dump(2) + "\n", output);
    return kExitOk;
}

SectionSpec load_or_sample(const std::string& input, std::size_t n,
                           std::size_t l, std::uint64_t seed, long bound) {
    if (!input.empty()) return section_from_json(read_json(input));
    Rng rng(seed);
    return general_section(rng, n, l, bound);
}

int cmd_aut_dim(std::size_t n, std::size_t l, std::uint64_t seed, long bound,
                const std::string& input, const std::string& output) {
    const SectionSpec s = load_or_sample(input, n, l, seed, bound);
    const AutReport r = quasihomogeneity_report(s, seed);
    write_output(report_to_json(r).dump(2) + "\n", output);
    return kExitOk;
}

int cmd_quasihomog(std::size_t n, std::size_t l, std::uint64_t seed,
                   long bound, const std::string& input,
                   const std::string& output) {
    const SectionSpec s = load_or_sample(input, n, l, seed, bound);
    const AutReport r = quasihomogeneity_report(s, seed);
    write_output(report_to_json(r).dump(2) + "\n", output);
    // Documented census cases: fail loudly when the verdict disagrees.
    std::optional<bool> want;
    if (l == 1 && n % 2 == 0) want = true;
    if (l == 2 && (n == 4 || n == 5 || n == 6)) want = true;
    if (l == 2 && (n == 7 || n == 9 || n == 11)) want = false;
    if (l == 3 && n == 4) want = true;
    if (l == 3 && n == 5) want = false;
    if (want && (r.verdict == "quasihomogeneous") != *want)
        throw MathMismatch("quasihomog: verdict contradicts the documented "
                           "census for N=" +
                           std::to_string(n) + ", l=" + std::to_string(l));
    return kExitOk;
}

int cmd_normal_form_pencil(const std::string& input,
                           const std::string& output) {
    const SectionSpec s = section_from_json(read_json(input));
    if (s.l() != 2)
        throw std::runtime_error("normal-form pencil: need a 2-matrix span");
    const AntisymPencil pencil(s.matrices()[0], s.matrices()[1]);
    Json out;
    if (pencil.size() % 2 == 0) {
        const PencilNormalFormOdd nf = pencil_normal_form_odd(pencil);
        Json lambdas = Json::array();
        for (const Rat& x : nf.lambdas) lambdas.push_back(rat_to_string(x));
        out = Json{{"kind", "odd"},
                   {"lambdas", lambdas},
                   {"T", matrix_to_json(nf.T)}};
    } else {
        const PencilNormalFormEven nf = pencil_normal_form_even(pencil);
        out = Json{{"kind", "even"},
                   {"lambdas", Json::array()},
                   {"T", matrix_to_json(nf.T)}};
    }
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

int cmd_normal_form_net(const std::string& input, const std::string& output) {
    const SectionSpec s = section_from_json(read_json(input));
    if (s.l() != 3 || s.N() != 5)
        throw std::runtime_error(
            "normal-form net: need a 3-matrix span of size 6");
    const AntisymNet net(s.matrices()[0], s.matrices()[1], s.matrices()[2]);
    const NetNormalFormG15 nf = net_normal_form_g15(net);
    const Json out{
        {"alpha", rat_to_string(nf.alpha)},
        {"beta", rat_to_string(nf.beta)},
        {"gamma", rat_to_string(nf.gamma)},
        {"delta", rat_to_string(nf.delta)},
        {"cubic", poly_to_json(standard_net_g15_cubic(nf.alpha, nf.beta,
                                                      nf.gamma, nf.delta))}};
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

int cmd_center_curve(const std::string& input, const std::string& output) {
    const SectionSpec s = section_from_json(read_json(input));
    if (s.l() != 2)
        throw std::runtime_error("center-curve: need a 2-matrix span");
    const AntisymPencil pencil(s.matrices()[0], s.matrices()[1]);
    const ExceptionalLocus locus = exceptional_locus_pencil(pencil);
    Json out;
    if (locus.odd_case) {
        Json lines = Json::array();
        for (const LineRep& line : locus.lines)
            lines.push_back(Json{{"p", vec_to_json(line.p().coords())},
                                 {"q", vec_to_json(line.q().coords())}});
        out = Json{{"kind", "exceptional-lines"}, {"lines", lines}};
    } else {
        Json comps = Json::array();
        for (const HomogPoly& c : locus.curve) comps.push_back(poly_to_json(c));
        out = Json{{"kind", "center-curve"}, {"components", comps}};
    }
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

int cmd_veronese(const std::string& input, const std::string& output) {
    const SectionSpec s = section_from_json(read_json(input));
    if (s.l() != 3 || s.N() != 4)
        throw std::runtime_error(
            "veronese: need a 3-matrix span of size 5");
    const AntisymNet net(s.matrices()[0], s.matrices()[1], s.matrices()[2]);
    const CenterMap cm = center_map(net);
    const ApolarityData ap = apolarity_data(cm);
    Json quads = Json::array();
    for (const HomogPoly& q : cm.quadrics) quads.push_back(poly_to_json(q));
    const Json out{{"quadrics", quads},
                   {"P_matrix", matrix_to_json(ap.p_matrix)},
                   {"C_P_matrix", matrix_to_json(ap.c_p_matrix)}};
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

int cmd_polar_check(const std::string& conic_path,
                    const std::string& triangle_path,
                    const std::string& output) {
    const Json cj = read_json(conic_path);
    const Conic conic{matrix_from_json(cj.at("matrix"))};
    const Json tj = read_json(triangle_path);
    const ProjPoint p(vec_from_json(tj.at("p")));
    const ProjPoint q(vec_from_json(tj.at("q")));
    const ProjPoint r(vec_from_json(tj.at("r")));
    const Triangle tri(p, q, r);
    const bool is_polar = is_polar_triangle(conic, tri);
    Json out{{"polar_triangle", is_polar}, {"witness", nullptr}};
    if (!is_polar) {
        const Conic witness = non_polar_witness(conic, tri);
        out["witness"] = Json{{"matrix", matrix_to_json(witness.m)}};
    }
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, std::size_t n,
                 const std::string& lambdas_arg, const std::string& params_arg,
                 long bound, const std::string& output) {
    if (output.empty())
        throw std::runtime_error("generate: --output is required");
    Rng rng(seed);
    Json truth{{"kind", kind}, {"seed", seed}};
    std::vector<AntisymMatrix> mats;
    std::size_t ambient = 0;

    auto parse_rats = [](const std::string& arg) {
        std::vector<Rat> out;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(rat_from_string(item));
        return out;
    };

    if (kind == "odd-pencil") {
        std::vector<Rat> lambdas = parse_rats(lambdas_arg);
        if (lambdas.empty())
            for (std::size_t i = 0; i < n; ++i)
                lambdas.push_back(Rat(2 * i + 1));
        const AntisymPencil p = block_pencil(lambdas);
        mats = {p.a, p.b};
        ambient = 2 * lambdas.size() - 1;
        Json ls = Json::array();
        for (const Rat& x : lambdas) ls.push_back(rat_to_string(x));
        truth["lambdas"] = ls;
    } else if (kind == "even-pencil") {
        const AntisymPencil p = even_size_pencil(n);
        mats = {p.a, p.b};
        ambient = 2 * n;
        truth["n"] = n;
    } else if (kind == "net-g15") {
        std::vector<Rat> params = parse_rats(params_arg);
        if (params.size() != 4)
            params = {Rat(1), Rat(1), Rat(2), Rat(3)};
        const AntisymNet net =
            standard_net_g15(params[0], params[1], params[2], params[3]);
        mats = {net.a, net.b, net.c};
        ambient = 5;
        truth["params"] = Json::array(
            {rat_to_string(params[0]), rat_to_string(params[1]),
             rat_to_string(params[2]), rat_to_string(params[3])});
    } else if (kind == "net-g14") {
        RatMatrix conic = random_symmetric(rng, 3, 4);
        while (det(conic) == 0) conic = random_symmetric(rng, 3, 4);
        const AntisymNet net = net_from_conic(conic);
        mats = {net.a, net.b, net.c};
        ambient = 4;
        truth["conic"] = matrix_to_json(conic);
    } else if (kind == "hyperplane") {
        if (n < 4)
            throw std::runtime_error("generate hyperplane: need --N >= 4");
        mats = {n % 2 == 0 ? padded_symplectic(n / 2)
                           : standard_symplectic_form((n + 1) / 2)};
        ambient = n;
        truth["N"] = n;
    } else {
        throw std::runtime_error("generate: unknown kind " + kind);
    }

    const RatMatrix conj = random_invertible(rng, ambient + 1, bound);
    std::vector<AntisymMatrix> moved;
    for (const AntisymMatrix& a : mats) moved.push_back(a.congruence(conj));
    const SectionSpec s(ambient, std::move(moved));
    truth["conjugator"] = matrix_to_json(conj);
    write_output(section_to_json(s).dump(2) + "\n", output);
    write_output(truth.dump(2) + "\n", output + ".truth.json");
    return kExitOk;
}

int cmd_pfaffian(const std::string& input, const std::string& output) {
    const Json j = read_json(input);
    const AntisymMatrix a = antisym_from_json(j);
    Json minors = Json::array();
    if (a.size() % 2 == 1)
        for (std::size_t i = 0; i < a.size(); ++i)
            minors.push_back(rat_to_string(pfaffian_minor(a, i)));
    const Json out{{"size", a.size()},
                   {"pfaffian", rat_to_string(pfaffian(a))},
                   {"pfaffian_minors", minors}};
    write_output(out.dump(2) + "\n", output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact toolkit for linear sections of line Grassmannians"};
    app.require_subcommand(1);

    std::uint64_t seed = 7;
    int samples = 5;
    std::size_t max_n = 10;
    long entry_bound = 20;
    std::size_t opt_n = 0, opt_l = 1;
    std::string input, output, format = "json";
    std::string kind, lambdas_arg, params_arg;
    std::string conic_path, triangle_path;

    CLI::App* scan = app.add_subcommand("scan", "reproduce the dimension "
                                                "table and the zero scan");
    scan->add_option("--seed", seed);
    scan->add_option("--samples", samples);
    scan->add_option("--max-N", max_n);
    scan->add_option("--entry-bound", entry_bound);
    scan->add_option("--output", output);
    scan->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* aut = app.add_subcommand("aut-dim", "group dimension report");
    aut->add_option("--N", opt_n)->required();
    aut->add_option("--l", opt_l)->required();
    aut->add_option("--seed", seed);
    aut->add_option("--entry-bound", entry_bound);
    aut->add_option("--input", input);
    aut->add_option("--output", output);

    CLI::App* quasi =
        app.add_subcommand("quasihomog", "quasihomogeneity verdict");
    quasi->add_option("--N", opt_n)->required();
    quasi->add_option("--l", opt_l)->required();
    quasi->add_option("--seed", seed);
    quasi->add_option("--entry-bound", entry_bound);
    quasi->add_option("--input", input);
    quasi->add_option("--output", output);

    CLI::App* nf = app.add_subcommand("normal-form", "canonical coordinates");
    nf->require_subcommand(1);
    CLI::App* nf_pencil = nf->add_subcommand("pencil");
    nf_pencil->add_option("--input", input)->required();
    nf_pencil->add_option("--output", output);
    CLI::App* nf_net = nf->add_subcommand("net");
    nf_net->add_option("--input", input)->required();
    nf_net->add_option("--output", output);

    CLI::App* cc = app.add_subcommand("center-curve",
                                      "exceptional locus of a pencil");
    cc->add_option("--input", input)->required();
    cc->add_option("--output", output);

    CLI::App* ver = app.add_subcommand("veronese",
                                       "center map of a size-5 net");
    ver->add_option("--input", input)->required();
    ver->add_option("--output", output);

    CLI::App* polar = app.add_subcommand("polar", "conic polarity tools");
    polar->require_subcommand(1);
    CLI::App* polar_check = polar->add_subcommand("check");
    polar_check->add_option("--conic", conic_path)->required();
    polar_check->add_option("--triangle", triangle_path)->required();
    polar_check->add_option("--output", output);

    CLI::App* gen = app.add_subcommand("generate", "seeded instances with "
                                                   "ground-truth sidecar");
    gen->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"odd-pencil", "even-pencil", "net-g15",
                               "net-g14", "hyperplane"}));
    gen->add_option("--seed", seed);
    gen->add_option("--n", opt_n);
    gen->add_option("--N", opt_n);
    gen->add_option("--lambdas", lambdas_arg);
    gen->add_option("--params", params_arg);
    gen->add_option("--entry-bound", entry_bound);
    gen->add_option("--output", output)->required();

    CLI::App* pf = app.add_subcommand("pfaffian", "pfaffian and its minors");
    pf->add_option("--input", input)->required();
    pf->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed())
            return cmd_scan(seed, samples, max_n, entry_bound, output,
                            format);
        if (aut->parsed())
            return cmd_aut_dim(opt_n, opt_l, seed, entry_bound, input,
                               output);
        if (quasi->parsed())
            return cmd_quasihomog(opt_n, opt_l, seed, entry_bound, input,
                                  output);
        if (nf->parsed())
            return nf_pencil->parsed()
                       ? cmd_normal_form_pencil(input, output)
                       : cmd_normal_form_net(input, output);
        if (cc->parsed()) return cmd_center_curve(input, output);
        if (ver->parsed()) return cmd_veronese(input, output);
        if (polar->parsed())
            return cmd_polar_check(conic_path, triangle_path, output);
        if (gen->parsed())
            return cmd_generate(kind, seed, opt_n == 0 ? 3 : opt_n,
                                lambdas_arg, params_arg,
                                entry_bound == 20 ? 3 : entry_bound, output);
        if (pf->parsed()) return cmd_pfaffian(input, output);
    } catch (const MathMismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitOperational;
}
