// uvctool: generate family graphs, certify graph6 streams, check homomorphisms.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uvc/batch.hpp"
#include "uvc/error.hpp"
#include "uvc/families.hpp"
#include "uvc/graph6.hpp"
#include "uvc/homcheck.hpp"
#include "uvc/uvccert.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string output = "-";
    std::size_t budget_vertices = uvc::SizeBudget{}.max_vertices;
    std::size_t budget_edges = uvc::SizeBudget{}.max_edges;

    uvc::SizeBudget budget() const { return {budget_vertices, budget_edges}; }
};

// Owns the output file when one is given, otherwise writes to stdout.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw uvc::Error(uvc::ErrorCode::InvalidArgument, "cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

// Each line of a file (or stdin for "-"), or the argument itself when it is
// not a readable path.
std::vector<std::string> graph6_inputs(const std::string& arg)
{
    std::vector<std::string> out;
    auto read_all = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (line.rfind(">>graph6<<", 0) == 0)
                line.erase(0, 10);
            if (!line.empty())
                out.push_back(line);
        }
    };
    if (arg == "-") {
        read_all(std::cin);
        return out;
    }
    std::ifstream file(arg, std::ios::binary);
    if (file)
        read_all(file);
    else
        out.push_back(arg);
    return out;
}

ordered_json map_json(const uvc::VertexMap& m)
{
    return {{"source_n", m.source_n}, {"target_n", m.target_n}, {"image", m.image}};
}

ordered_json big_json(const uvc::BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

std::string case_name(uvc::QCubeCase c)
{
    switch (c) {
    case uvc::QCubeCase::Case1: return "Case1";
    case uvc::QCubeCase::Case2: return "Case2";
    case uvc::QCubeCase::Case3: return "Case3";
    }
    return "";
}

uvc::VertexMap parse_map(const std::string& text, std::size_t source_n, std::size_t target_n)
{
    std::string body = text;
    if (std::ifstream file(text); file)
        body.assign(std::istreambuf_iterator<char>(file), {});
    const auto j = nlohmann::json::parse(body, nullptr, false);
    const auto& arr = j.is_object() && j.contains("image") ? j["image"] : j;
    if (!arr.is_array())
        throw uvc::Error(uvc::ErrorCode::InvalidArgument, "map must be a JSON array of target indices");
    uvc::VertexMap m{source_n, target_n, {}};
    for (const auto& x : arr) {
        if (!x.is_number_unsigned())
            throw uvc::Error(uvc::ErrorCode::InvalidArgument, "map entries must be non-negative integers");
        m.image.push_back(x.get<std::size_t>());
    }
    return m;
}

int report_error(const uvc::Error& e)
{
    std::string msg = e.what();
    const std::string prefix = std::string(uvc::error_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0)
        msg.erase(0, prefix.size());
    std::cerr << ordered_json{{"error", std::string(uvc::error_name(e.code()))}, {"message", msg}}.dump() << '\n';
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Unique vector colorability and core certificates for graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--output", opt.output, "Output path, '-' for stdout");
    app.add_option("--budget-vertices", opt.budget_vertices, "Largest generated vertex count")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-edges", opt.budget_edges, "Largest generated edge count")->check(CLI::PositiveNumber);

    // ------------------------------------------------------------ gen
    auto* gen = app.add_subcommand("gen", "Print one family graph as graph6");
    std::string family;
    std::vector<std::size_t> params;
    gen->add_option("family", family, "kneser | q-kneser | hamming-h | hamming-h-prime | cayley-z2 | q-cube")
        ->required()
        ->check(CLI::IsMember({"kneser", "q-kneser", "hamming-h", "hamming-h-prime", "cayley-z2", "q-cube"}));
    gen->add_option("params", params, "Family parameters")->required();

    // ------------------------------------------------------------ certify
    auto* certify = app.add_subcommand("certify", "Certify graph6 lines, one report per line");
    std::string input = "-";
    std::size_t jobs = 1;
    std::string format = "jsonl";
    std::string rank_method = "coordinates";
    bool no_timing = false;
    certify->add_option("input", input, "graph6 file, '-' for stdin");
    certify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    certify->add_option("--format", format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
    certify->add_option("--rank-method", rank_method, "coordinates | edge-gram")
        ->check(CLI::IsMember({"coordinates", "edge-gram"}));
    certify->add_flag("--no-timing", no_timing, "Report ms as 0 for reproducible output");

    // ------------------------------------------------------------ hom
    auto* hom = app.add_subcommand("hom", "Homomorphism checks between family graphs");
    std::string hom_kind;
    std::vector<std::string> hom_args;
    std::uint64_t node_budget = 10'000'000;
    hom->add_option("kind", hom_kind,
                    "kneser | q-kneser | hamming | kneser-map | hamming-map | q-cube | verify | search")
        ->required()
        ->check(CLI::IsMember(
            {"kneser", "q-kneser", "hamming", "kneser-map", "hamming-map", "q-cube", "verify", "search"}));
    hom->add_option("args", hom_args, "Parameters, or graph6 strings and a JSON map for verify/search");
    hom->add_option("--node-budget", node_budget, "Search node limit for 'search'");

    // ------------------------------------------------------------ augment / spectra
    auto* augment = app.add_subcommand("augment", "Print G'(p) of each input graph as graph6");
    std::string augment_input = "-";
    augment->add_option("input", augment_input, "graph6 string or file, '-' for stdin");

    auto* spectra = app.add_subcommand("spectra", "Characteristic polynomial and least eigenvalue");
    std::string spectra_input = "-";
    spectra->add_option("input", spectra_input, "graph6 string or file, '-' for stdin");

    CLI11_PARSE(app, argc, argv);

    try {
        Output out(opt.output);
        std::ostream& os = out.stream();

        if (*gen) {
            auto need = [&](std::size_t count) {
                if (params.size() != count)
                    throw uvc::Error(uvc::ErrorCode::InvalidArgument,
                                     family + " takes " + std::to_string(count) + " parameters");
            };
            uvc::Graph g;
            if (family == "kneser") {
                need(2);
                g = uvc::kneser(params[0], params[1], opt.budget());
            } else if (family == "q-kneser") {
                need(3);
                g = uvc::q_kneser({params[0], params[1], params[2]}, opt.budget());
            } else if (family == "hamming-h") {
                need(2);
                g = uvc::hamming_h(params[0], params[1], opt.budget());
            } else if (family == "hamming-h-prime") {
                need(2);
                g = uvc::hamming_h_prime(params[0], params[1], opt.budget());
            } else if (family == "cayley-z2") {
                if (params.size() < 2)
                    throw uvc::Error(uvc::ErrorCode::InvalidArgument, "cayley-z2 takes n and at least one weight");
                g = uvc::cayley_z2(params[0], std::set<std::size_t>(params.begin() + 1, params.end()), opt.budget());
            } else {
                need(2);
                g = uvc::q_cube(params[0], params[1], opt.budget());
            }
            os << uvc::write_graph6(g) << '\n';
            return 0;
        }

        if (*certify) {
            uvc::RunConfig config;
            config.jobs = jobs;
            config.format = format == "csv" ? uvc::ReportFormat::Csv : uvc::ReportFormat::Jsonl;
            config.timing = !no_timing;
            config.rank_method =
                rank_method == "edge-gram" ? uvc::RankMethod::EdgeGram : uvc::RankMethod::Coordinates;
            uvc::BatchCounts counts;
            if (input == "-") {
                counts = uvc::certify_stream(std::cin, os, config);
            } else {
                std::ifstream in(input, std::ios::binary);
                if (!in)
                    throw uvc::Error(uvc::ErrorCode::InvalidArgument, "cannot open input file " + input);
                counts = uvc::certify_stream(in, os, config);
            }
            return static_cast<int>(std::min<std::size_t>(counts.errors, 125));
        }

        if (*hom) {
            auto num = [&](std::size_t i) -> std::size_t {
                if (i >= hom_args.size())
                    throw uvc::Error(uvc::ErrorCode::InvalidArgument, hom_kind + ": missing parameter");
                return std::stoull(hom_args[i]);
            };
            ordered_json j;
            if (hom_kind == "kneser") {
                j["exists"] = uvc::kneser_hom_exists(num(0), num(1), num(2), num(3));
            } else if (hom_kind == "q-kneser") {
                j["necessary_condition"] = uvc::q_kneser_necessary(num(0), num(1), num(2), num(3), num(4), num(5));
            } else if (hom_kind == "hamming") {
                j["exists"] = uvc::hamming_hom_exists(num(0), num(1), num(2), num(3));
            } else if (hom_kind == "kneser-map") {
                j = map_json(uvc::kneser_hom_map(num(0), num(1), num(2)));
            } else if (hom_kind == "hamming-map") {
                j = map_json(uvc::hamming_hom_map(num(0), num(1), num(2)));
            } else if (hom_kind == "q-cube") {
                j["case"] = case_name(uvc::q_cube_core_classification(num(0), num(1)));
            } else {
                if (hom_args.size() < 2)
                    throw uvc::Error(uvc::ErrorCode::InvalidArgument, hom_kind + " takes two graph6 strings");
                const uvc::Graph g = uvc::parse_graph6(hom_args[0]);
                const uvc::Graph h = uvc::parse_graph6(hom_args[1]);
                if (hom_kind == "verify") {
                    if (hom_args.size() < 3)
                        throw uvc::Error(uvc::ErrorCode::InvalidArgument, "verify needs a map");
                    const auto v = uvc::verify_homomorphism(g, h, parse_map(hom_args[2], g.order(), h.order()));
                    j["is_hom"] = v.is_hom;
                    j["is_injective"] = v.is_injective;
                    j["is_induced_embedding"] = v.is_induced_embedding;
                } else {
                    const auto m = uvc::brute_force_hom(g, h, node_budget);
                    j["exists"] = m.has_value();
                    j["map"] = m ? ordered_json(m->image) : ordered_json();
                }
            }
            os << j.dump() << '\n';
            return 0;
        }

        if (*augment) {
            for (const auto& line : graph6_inputs(augment_input))
                os << uvc::write_graph6(uvc::augmented_graph(uvc::parse_graph6(line))) << '\n';
            return 0;
        }

        if (*spectra) {
            for (const auto& line : graph6_inputs(spectra_input)) {
                const auto s = uvc::spectral_data(uvc::parse_graph6(line));
                ordered_json phi = ordered_json::array();
                for (const auto& c : s.phi.coeffs())
                    phi.push_back(big_json(c));
                os << ordered_json{{"phi", phi}, {"tau", big_json(s.tau)}, {"d", s.d}, {"c", big_json(s.c)}}.dump()
                   << '\n';
            }
            return 0;
        }
    } catch (const uvc::Error& e) {
        return report_error(e);
    } catch (const std::invalid_argument&) {
        return report_error(uvc::Error(uvc::ErrorCode::InvalidArgument, "parameters must be non-negative integers"));
    } catch (const std::out_of_range&) {
        return report_error(uvc::Error(uvc::ErrorCode::OutOfRange, "parameter does not fit"));
    }
    return 0;
}
