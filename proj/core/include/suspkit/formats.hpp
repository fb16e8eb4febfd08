#ifndef SUSPKIT_FORMATS_HPP
#define SUSPKIT_FORMATS_HPP

#include "suspkit/gog_automorphism.hpp"
#include "suspkit/graph_of_groups.hpp"
#include "suspkit/orbit.hpp"
#include "suspkit/suspension.hpp"
#include "suspkit/words.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace suspkit {

// All parsers throw ParseError with 1-based line and column information.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line, column;
};

// Words are whitespace-separated tokens: `1` for the identity, `label` or
// `label^k` otherwise.
Word parse_word(const std::string& text, const Alphabet& alphabet, int line = 0);
std::string format_word(const Word& w, const Alphabet& alphabet);

// --- automorphism files -----------------------------------------------

struct AutFile {
    Alphabet alphabet;
    std::vector<Word> images;
    std::optional<std::vector<Word>> inverse_images; // found under [inverse]

    // Uses the stored inverse when present, otherwise inverts the images.
    FreeAutomorphism bind() const;
    bool operator==(const AutFile&) const = default;
};

AutFile parse_aut(const std::string& text);
std::string serialize_aut(const AutFile& f);

// --- presentation files -----------------------------------------------

struct PresentationFile {
    GroupPresentation presentation;
    bool operator==(const PresentationFile&) const = default;
};

PresentationFile parse_grp(const std::string& text);
std::string serialize_grp(const PresentationFile& f);

// --- splitting files ----------------------------------------------------

struct SplittingFile {
    GraphOfGroups gog;
    std::string base_vertex; // empty = first vertex
    std::vector<std::string> tree_edges;
    std::optional<Alphabet> external_names;
    std::vector<BassExpression> dictionary; // per external name
    // presentation generator name -> word over the external names
    std::vector<std::pair<std::string, Word>> reverse_dictionary;
    std::vector<Word> fiber_words;
    std::optional<Word> transverse_word;

    SplittingContext bind() const;
    bool operator==(const SplittingFile&) const = default;
};

SplittingFile parse_gog(const std::string& text);
std::string serialize_gog(const SplittingFile& f);
SplittingFile canonical_splitting_file(const CanonicalSplitting& c);

std::string format_bass(const BassExpression& x, const GraphOfGroups& gog);

// --- twist files ----------------------------------------------------------

struct TwistFile {
    std::vector<DehnTwist> twists;          // `twist e : word` lines, in order
    std::optional<InertTwist> inert;        // `inert v : word` lines
    std::optional<GogAutomorphism> tuple;   // general tuple sections

    // Everything composed left to right in file order: twists, then the
    // inert twist, then the tuple.
    GogAutomorphism bind(const GraphOfGroups& gog) const;
    bool operator==(const TwistFile&) const = default;
};

TwistFile parse_twists(const std::string& text, const GraphOfGroups& gog);
std::string serialize_twists(const TwistFile& f, const GraphOfGroups& gog);

// --- centralizer generating sets ------------------------------------------

// Lines `edge : word`, one generator per line, grouped per oriented edge.
std::vector<std::vector<Word>> parse_centralizers(const std::string& text, const GraphOfGroups& gog);
std::string serialize_centralizers(const std::vector<std::vector<Word>>& s_sets,
                                   const GraphOfGroups& gog);

// --- element family files ---------------------------------------------

// One word per line over the given alphabet; the last line is the
// orientation target.
std::vector<Word> parse_family(const std::string& text, const Alphabet& alphabet);
std::string serialize_family(const std::vector<Word>& family, const Alphabet& alphabet);

// --- isomorphism certificate files ------------------------------------

IsoCertificate parse_iso(const std::string& text, const Suspension& s1, const Suspension& s2);
std::string serialize_iso(const IsoCertificate& cert, const Suspension& s1, const Suspension& s2);

// --- conjugacy certificate files ---------------------------------------

ConjugacyCertificate parse_conj(const std::string& text, const Alphabet& fiber);
std::string serialize_conj(const ConjugacyCertificate& cert, const Alphabet& fiber);

// --- coset representative files ----------------------------------------

std::vector<ExternalAutomorphism> parse_cosets(const std::string& text, const Alphabet& alphabet);
std::string serialize_cosets(const std::vector<ExternalAutomorphism>& reps, const Alphabet& alphabet);

// --- helpers ---------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace suspkit

#endif
