#include "uvc/batch.hpp"

#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <thread>
#include <variant>
#include <vector>

#include "uvc/error.hpp"
#include "uvc/graph6.hpp"

namespace uvc {

namespace {

nlohmann::ordered_json big_to_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

template <class T>
std::string opt_text(const std::optional<T>& v)
{
    if (!v)
        return "";
    if constexpr (std::is_same_v<T, BigInt>)
        return v->get_str();
    else if constexpr (std::is_same_v<T, Verdict>)
        return to_string(*v);
    else
        return std::to_string(*v);
}

struct Failure {
    std::size_t id = 0;
    std::string code;
    std::string message;
};

using Outcome = std::variant<CertReport, Failure>;

Outcome certify_line(const std::string& line, std::size_t id, const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    try {
        CertReport r = core_certificate(parse_graph6(line), config.rank_method);
        r.id = id;
        if (config.timing)
            r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
        return r;
    } catch (const Error& e) {
        std::string msg = e.what();
        const std::string prefix = std::string(error_name(e.code())) + ": ";
        if (msg.rfind(prefix, 0) == 0)
            msg.erase(0, prefix.size());
        return Failure{id, std::string(error_name(e.code())), msg};
    }
}

void write_outcome(std::ostream& out, const Outcome& o, ReportFormat format)
{
    if (const auto* r = std::get_if<CertReport>(&o)) {
        if (format == ReportFormat::Jsonl)
            out << report_to_json(*r).dump() << '\n';
        else
            out << report_to_csv(*r) << '\n';
        return;
    }
    const auto& f = std::get<Failure>(o);
    if (format == ReportFormat::Jsonl) {
        nlohmann::ordered_json j;
        j["index"] = f.id;
        j["error"] = f.code;
        j["message"] = f.message;
        out << j.dump() << '\n';
    } else {
        out << f.id << std::string(13, ',') << csv_escape(f.code + ": " + f.message) << '\n';
    }
}

void tally(BatchCounts& c, const Outcome& o)
{
    ++c.total;
    const auto* r = std::get_if<CertReport>(&o);
    if (!r) {
        ++c.errors;
        return;
    }
    if (r->verdict == Verdict::Tight)
        ++c.tight;
    else if (r->verdict == Verdict::Loose)
        ++c.loose;
    if (r->core == CoreConclusion::CertifiedCore)
        ++c.certified_core;
}

void run_chunk(const std::vector<std::string>& lines, std::size_t first_id, std::vector<Outcome>& results,
               const RunConfig& config)
{
    results.assign(lines.size(), Outcome{});
    const std::size_t workers = std::min(config.jobs, lines.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            results[i] = certify_line(lines[i], first_id + i, config);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < lines.size(); i = next++)
                results[i] = certify_line(lines[i], first_id + i, config);
        });
}

} // namespace

nlohmann::ordered_json report_to_json(const CertReport& r)
{
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["degree"] = r.degree ? nlohmann::ordered_json(*r.degree) : nlohmann::ordered_json();
    if (r.srg)
        j["srg"] = {r.srg->v, r.srg->k, r.srg->a, r.srg->c};
    else
        j["srg"] = nullptr;
    j["tau"] = r.tau ? big_to_json(*r.tau) : nlohmann::ordered_json();
    j["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json();
    j["edges"] = r.edges;
    j["rank"] = r.rank ? nlohmann::ordered_json(*r.rank) : nlohmann::ordered_json();
    j["target"] = r.target ? nlohmann::ordered_json(*r.target) : nlohmann::ordered_json();
    j["verdict"] = r.verdict ? nlohmann::ordered_json(to_string(*r.verdict)) : nlohmann::ordered_json();
    j["core"] = to_string(r.core);
    j["reasons"] = r.reasons;
    j["ms"] = r.ms;
    return j;
}

std::string report_to_csv(const CertReport& r)
{
    std::string srg;
    if (r.srg)
        srg = std::to_string(r.srg->v) + ";" + std::to_string(r.srg->k) + ";" + std::to_string(r.srg->a) + ";"
              + std::to_string(r.srg->c);
    std::string reasons;
    for (const auto& s : r.reasons)
        reasons += (reasons.empty() ? "" : ";") + s;
    return std::to_string(r.id) + "," + std::to_string(r.n) + "," + opt_text(r.degree) + "," + srg + ","
           + opt_text(r.tau) + "," + opt_text(r.d) + "," + std::to_string(r.edges) + "," + opt_text(r.rank) + ","
           + opt_text(r.target) + "," + opt_text(r.verdict) + "," + to_string(r.core) + "," + csv_escape(reasons)
           + "," + std::to_string(r.ms) + ",";
}

BatchCounts certify_stream(std::istream& in, std::ostream& out, const RunConfig& config)
{
    if (config.jobs == 0)
        throw Error(ErrorCode::InvalidArgument, "jobs must be at least 1");
    if (config.format == ReportFormat::Csv)
        out << kCsvVersionLine << '\n' << kCsvColumns << '\n';

    const std::size_t chunk = 16 * config.jobs;
    BatchCounts counts;
    std::vector<std::string> lines;
    std::vector<Outcome> results;
    std::size_t next_id = 0;
    std::string line;

    auto flush = [&] {
        run_chunk(lines, next_id, results, config);
        for (const auto& o : results) {
            write_outcome(out, o, config.format);
            tally(counts, o);
        }
        next_id += lines.size();
        lines.clear();
    };

    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty())
                continue;
        }
        lines.push_back(line);
        if (lines.size() == chunk)
            flush();
    }
    if (!lines.empty())
        flush();

    if (config.format == ReportFormat::Jsonl) {
        nlohmann::ordered_json s;
        s["total"] = counts.total;
        s["tight"] = counts.tight;
        s["loose"] = counts.loose;
        s["certified_core"] = counts.certified_core;
        s["errors"] = counts.errors;
        out << nlohmann::ordered_json{{"summary", s}}.dump() << '\n';
    } else {
        out << "# summary total=" << counts.total << " tight=" << counts.tight << " loose=" << counts.loose
            << " certified_core=" << counts.certified_core << " errors=" << counts.errors << '\n';
    }
    out.flush();
    return counts;
}

} // namespace uvc
