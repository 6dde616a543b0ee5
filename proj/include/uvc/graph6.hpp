#ifndef UVC_GRAPH6_HPP
#define UVC_GRAPH6_HPP

#include <string>
#include <string_view>

#include "uvc/graph.hpp"

namespace uvc {

inline constexpr std::size_t kGraph6MaxOrder = 258047;

// graph6 codec (nauty's format).  Bytes are 63 + a 6-bit group; the order
// prefix is one byte for n <= 62, otherwise '~' and three bytes.  Adjacency
// bits are the strict upper triangle in column order x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed big-endian.

/// Decodes one record.  A trailing '\n' or "\r\n" is tolerated; anything else
/// outside 63..126 or a wrong body length throws MalformedGraph6.
Graph parse_graph6(std::string_view bytes);

std::string write_graph6(const Graph& g);

} // namespace uvc

#endif // UVC_GRAPH6_HPP
