#ifndef RSCONN_SERIALIZE_HPP
#define RSCONN_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rsconn/connection.hpp"
#include "rsconn/equivalence.hpp"
#include "rsconn/global_p1.hpp"
#include "rsconn/normalize.hpp"

namespace rsconn {

// All emitters use insertion-ordered JSON so that identical data always
// renders to identical bytes.
using Json = nlohmann::ordered_json;

// ---- system files ----
//
// Schema: {"format": 1, "size": n, "num_params": r, "order_t": k,
//          "order_x": N, "matrix": [[series ...] ...]}
// with series = [{"xpow": n, "coeff": {monomial: "p/q", ...}}, ...] sorted
// strictly by xpow and monomial keys like "1", "t1", "t1^2*t2".  Parsing
// rejects duplicate keys, unknown keys, out-of-range degrees and malformed
// rationals, each with a path diagnostic.

Connection parse_system(const std::string& text);
Connection system_from_json(const Json& j);
Json system_to_json(const Connection& c);
// Canonical bytes: compact dump plus trailing newline.
std::string serialize_system(const Connection& c);

// ---- building blocks ----
Json local_elem_to_json(const LocalElem& a);
Json series_to_json(const LaurentSeries& f);
Json local_matrix_to_json(const LocalMatrix& m);
Json series_matrix_to_json(const SeriesMatrix& m);
Json qmatrix_to_json(const QMatrix& m);

// ---- reports ----
Json exponents_to_json(const ExponentSet& e);
Json euler_form_to_json(const EulerForm& e);
// {"classes": [...], "nilpotent": [[...]]}; classes are expanded per
// dimension; nilpotent entries are plain strings when there are no
// parameters and coefficient objects otherwise.
Json zrep_to_json(const ZRepData& z);
Json p1_lattice_to_json(const P1Lattice& l);
Json hom_basis_to_json(const std::vector<HomBasisElem>& basis);
Json sections_to_json(const std::vector<std::vector<LocalElem>>& secs);

// ---- plain-text renderings for --output text ----
std::string exponents_to_text(const ExponentSet& e);
std::string system_to_text(const Connection& c);
std::string local_matrix_to_text(const LocalMatrix& m);
std::string euler_form_to_text(const EulerForm& e);
std::string zrep_to_text(const ZRepData& z);
std::string p1_lattice_to_text(const P1Lattice& l);
std::string hom_basis_to_text(const std::vector<HomBasisElem>& basis);
std::string sections_to_text(const std::vector<std::vector<LocalElem>>& secs);

}  // namespace rsconn

#endif
