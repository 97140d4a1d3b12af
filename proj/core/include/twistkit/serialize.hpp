#pragma once

#include "twistkit/descent.hpp"
#include "twistkit/group_cocycle.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <variant>

namespace twistkit {

using Json = nlohmann::json;

/// Typed payload of a descent file.
struct HornFile {
    std::string mode; // "stc" or "green"
    GTTLabelling edge_a;
    GTTLabelling edge_b;
};
struct QuasiIsoFile {
    GradedMap map;
};
struct StrictifiedFile {
    Complex a_tilde;
    Complex b_tilde;
    GradedMap f_tilde;
    ElementaryDecl decl_a;
    ElementaryDecl decl_b;
};
struct NerveFile {
    Cover cover;
    Labelling labelling;
    SimplexFamily simplices;
};
struct CocycleFile {
    PrincipalCocycle g;
    std::optional<PrincipalCocycle> h;
    std::optional<std::map<int, Matrix>> lambda;
};
struct GttFile {
    GTTLabelling labelling;
};

struct DescentFile {
    int format = 1;
    Field field;
    std::string kind;
    std::variant<LocFreeData, TwistingCochainData, SimplicialTwistData, TwistPathData,
                 WeakEquivalenceData, CocycleFile, HornFile, GttFile, QuasiIsoFile,
                 StrictifiedFile, NerveFile>
        payload;
};

Json to_json(const DescentFile& f);
DescentFile descent_file_from_json(const Json& j);

/// Canonical serialization: two-space indent, sorted keys, trailing newline.
std::string canonical_text(const DescentFile& f);
DescentFile parse_descent_file(const std::string& text);

DescentFile load_descent_file(const std::string& path);
/// Write-temp-then-rename.
void save_descent_file(const std::string& path, const DescentFile& f);

/// Runs the validator matching the file's kind (green/stc honour
/// strict_elementary).  Throws on kinds that have no validator.
Report validate_descent_file(const DescentFile& f, bool strict_elementary = false);

} // namespace twistkit
