#pragma once

#include "json.hpp"

#include <string>
#include <vector>

// Command implementations shared by the CLI and the python bindings. Each
// command returns a JSON document; to_text renders the human-readable view.
namespace algrest::driver {

using json = nlohmann::json;

// p1,q1,...,pn,qn.
std::vector<std::string> darboux_vars(int n);

json qh_check(const std::vector<std::string> &vars, const std::string &ideal_text);

json restrict_basis(const std::vector<std::string> &vars, const std::string &ideal_text,
                    int p, bool closed, int trunc_cap);

json reduce(const std::vector<std::string> &vars, const std::string &ideal_text,
            const std::string &form_text, int trunc_cap);

json primitive(const std::vector<std::string> &vars, const std::string &ideal_text,
               const std::string &form_text, int trunc_cap);

// Empty vars or form fall back to Darboux names and the standard form.
json invariants(const std::vector<std::string> &vars, const std::string &ideal_text,
                const std::string &form_text, int n, int trunc_cap);

json classify(const std::string &family, const std::vector<std::string> &vars,
              const std::string &ideal_text, const std::string &form_text, int n,
              int trunc_cap);

json table(const std::string &family, long long a, long long b, int n, int trunc_cap);

std::string to_text(const json &doc);

// dump(2) with a trailing newline; keys are emitted sorted.
std::string to_json_text(const json &doc);

}  // namespace algrest::driver
