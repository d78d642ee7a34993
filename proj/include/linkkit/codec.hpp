#pragma once
#include <string>

#include "linkkit/braid.hpp"
#include "linkkit/diagram.hpp"

namespace linkkit {

// PD text: optional "components=n unknots=u" header, X(a,b,c,d) lines, # comments
LinkDiagram parse_pd(const std::string& text);
std::string serialize_pd(const LinkDiagram& d);

// braid text: "strands=n" header, tokens s3, s3^-1, A(1,4), A(1,4)^-1
BraidWord parse_braid(const std::string& text);
std::string serialize_braid(const BraidWord& w);

}  // namespace linkkit
