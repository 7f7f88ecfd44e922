#ifndef SCHURLAT_IO_HPP_
#define SCHURLAT_IO_HPP_

#include <json.hpp>

#include "schurlat/cartan.hpp"
#include "schurlat/gentle_c2.hpp"
#include "schurlat/modrep.hpp"
#include "schurlat/tilting.hpp"
#include "schurlat/weyl.hpp"

namespace schurlat {

using Json = nlohmann::json;

// All indices in JSON are 1-based. Malformed documents throw ParseError;
// well-formed but invalid data throws the validation error of the type.
Json to_json(CartanData const& data);
CartanData cartan_from_json(Json const& j);

Json to_json(RootVector const& v);
RootVector root_from_json(Json const& j);

Json to_json(RootSet const& set);

Json to_json(FpMatrix const& m);

// {"dims": [...], "eps": {"i": rows}, "arrows": {"i,j,g": rows}, "p": p};
// eps entries are present only for vertices with c_i > 1.
Json to_json(HPresentation const& pres, GenModule const& m);
GenModule module_from_json(HPresentation const& pres, Json const& j);

Json to_json(EndReport const& rep);
Json to_json(BrickReport const& rep);
Json to_json(SupportTiltingPair const& pair);
Json to_json(ExchangeGraph const& g);
Json to_json(GraphReport const& rep);

// Parses text; ParseError on malformed JSON.
Json parse_json(std::string const& text);

}  // namespace schurlat

#endif  // SCHURLAT_IO_HPP_
