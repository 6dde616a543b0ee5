#ifndef UVC_BATCH_HPP
#define UVC_BATCH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "uvc/uvccert.hpp"

namespace uvc {

enum class ReportFormat { Jsonl, Csv };

struct RunConfig {
    std::size_t jobs = 1;
    ReportFormat format = ReportFormat::Jsonl;
    /// Write ms = 0 so that reports are byte-identical between runs.
    bool timing = true;
    RankMethod rank_method = RankMethod::Coordinates;
};

struct BatchCounts {
    std::size_t total = 0;
    std::size_t tight = 0;
    std::size_t loose = 0;
    std::size_t certified_core = 0;
    std::size_t errors = 0;

    friend bool operator==(const BatchCounts&, const BatchCounts&) = default;
};

nlohmann::ordered_json report_to_json(const CertReport& r);

inline constexpr const char* kCsvVersionLine = "# uvc-report csv v1";
inline constexpr const char* kCsvColumns =
    "id,n,degree,srg,tau,d,edges,rank,target,verdict,core,reasons,ms,error";

std::string report_to_csv(const CertReport& r);

/*
 * Certifies every graph6 line of `in` and writes one report per line in
 * input order, followed by a summary line.  Blank lines and a ">>graph6<<"
 * header are skipped; ids count the remaining lines from 0.  A line that
 * fails (parse error, disconnected graph, ...) yields an error record and
 * the stream continues.  Input is consumed in bounded chunks.
 */
BatchCounts certify_stream(std::istream& in, std::ostream& out, const RunConfig& config);

} // namespace uvc

#endif // UVC_BATCH_HPP
