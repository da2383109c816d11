#pragma once

#include <string>

#include "json.hpp"
#include "quintic/qdiff.hpp"

namespace qk {

using Json = nlohmann::json;

/* {"num": [...], "den": [...]}: dense ascending coefficient lists of the
   reduced fraction with the denominator expanded; every entry is a decimal
   "p" or "p/q" string, never a native number */
Json ratfun_to_json(const QRatFun& f);
QRatFun ratfun_from_json(const Json& j);

/* array over n = 0..N of rational-function records */
Json series_to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

/* array over n of 4-tuples of rational-function records */
Json kseries_to_json(const KSeries& s);
KSeries kseries_from_json(const Json& j);

/* row-major 16-entry array of series records */
Json matrix_to_json(const Matrix4Series& m);
Matrix4Series matrix_from_json(const Json& j);

/* {"gv": {"1": "2875", ...}} with integer strings, degrees contiguous
   from 1 */
Json gv_to_json(const GVTable& t);
GVTable gv_from_json(const Json& j);
GVTable load_gv_file(const std::string& path);

/* display form: numerator over (1-q)^m when the denominator is a pure power
   of 1-q, else numerator over the expanded denominator */
std::string ratfun_text(const QRatFun& f);

}  // namespace qk
