// Copyright 2026 The extwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXTWIT_JSON_IO_H
#define EXTWIT_JSON_IO_H

#include <string>

#include "json.hpp"

#include "extwit/choi.h"
#include "extwit/extension.h"
#include "extwit/hermitian_operator.h"
#include "extwit/mdiew.h"
#include "extwit/witness.h"

namespace extwit::io {

using json = nlohmann::json;

/// {"dims":[...], "cut":k, "data":[[[re,im],...],...]}, row-major. Readers
/// reject Hermiticity defects above 1e-9 and throw InputError on malformed
/// documents.
json operator_to_json(const HermitianOperator &op);
HermitianOperator operator_from_json(const json &doc);

/// Dense complex matrix as [[[re,im],...],...].
json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const json &doc);

json vector_to_json(const Vector &v);

/// {"dims":[...], "cut":k, "factors":[[[re,im],...],...]}
json product_vector_to_json(const ProductVector &v);
ProductVector product_vector_from_json(const json &doc);

json see_saw_report_to_json(const SeeSawReport &report);
json zero_set_to_json(const ZeroSet &zeros);
json spanning_to_json(const SpanningResult &result);
json certification_to_json(const Certification &cert);

/// {"cap_left": operator, "cap_right": operator}
json extension_spec_to_json(const ExtensionSpec &spec);
ExtensionSpec extension_spec_from_json(const json &doc);

json exhibit_to_json(const choi::Exhibit &exhibit);

/// {"witness": operator, "basis_left": [...], "basis_right": [...],
///  "beta": [[...]], "povm_left": operator, "povm_right": operator}
json scenario_to_json(const mdiew::MdiewScenario &scenario);
mdiew::MdiewScenario scenario_from_json(const json &doc);

json audit_report_to_json(const mdiew::AuditReport &report);

/// Parses a file; InputError on I/O or syntax errors.
json read_json_file(const std::string &path);
/// Pretty-printed with a trailing newline.
std::string dump(const json &doc);

}  // namespace extwit::io

#endif
