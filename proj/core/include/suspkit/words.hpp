#ifndef SUSPKIT_WORDS_HPP
#define SUSPKIT_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace suspkit {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A letter is a signed 1-based generator reference: +(i+1) for generator i,
// -(i+1) for its inverse. 0 is never a letter.
using Letter = std::int32_t;

inline int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? 1 : -1; }
inline Letter make_letter(int gen, int sign) {
    return sign > 0 ? Letter(gen + 1) : Letter(-(gen + 1));
}

// Finite ranked generating set with distinct printable labels.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t rank() const { return names_.size(); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& label) const;

    bool operator==(const Alphabet&) const = default;

    static bool valid_label(const std::string& label);

private:
    std::vector<std::string> names_;
};

// Freely reduced word. The empty word is the identity.
class Word {
public:
    Word() = default;
    // Reduces the given letter sequence.
    explicit Word(std::vector<Letter> raw) : letters_(free_reduce(std::move(raw))) {}

    static Word generator(int i) { return Word(std::vector<Letter>{make_letter(i, 1)}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    int max_gen_index() const;

    bool operator==(const Word&) const = default;
    // Length-then-letter order; letters compare as a < a^-1 < b < b^-1 < ...
    bool operator<(const Word& other) const;

    static std::vector<Letter> free_reduce(std::vector<Letter> raw);

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
Word power(const Word& w, long long k);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
    Word core;
    Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Least rotation of a cyclically reduced word (identity for the empty word).
Word least_rotation(const Word& w);

// Conjugacy in the ambient free group. On success the witness c satisfies
// c^-1 u c = v.
std::optional<Word> free_conjugate(const Word& u, const Word& v);

// Automorphism of a free group given by generator images plus a stored
// inverse, checked on construction: both compositions fix every generator.
class FreeAutomorphism {
public:
    FreeAutomorphism(Alphabet domain, std::vector<Word> images, std::vector<Word> inverse_images);

    // Attempts to invert the generator map (Stallings folding with
    // annotations); fails if the images are not a basis.
    static FreeAutomorphism from_images(Alphabet domain, std::vector<Word> images);
    static FreeAutomorphism identity(Alphabet domain);
    // x |-> g^-1 x g
    static FreeAutomorphism inner(Alphabet domain, const Word& g);

    const Alphabet& domain() const { return domain_; }
    const Word& image(int gen) const { return images_.at(gen); }
    const std::vector<Word>& images() const { return images_; }
    const std::vector<Word>& inverse_images() const { return inverse_images_; }

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;
    Word apply_power(const Word& w, long long k) const;

    FreeAutomorphism inverted() const;

    bool operator==(const FreeAutomorphism&) const = default;

private:
    FreeAutomorphism() = default;
    Alphabet domain_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

// (phi o psi)(x) = phi(psi(x))
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

Word apply_images(const std::vector<Word>& images, const Word& w);

// Shortest r with w a power of r; r inherits w's conjugation collar.
Word primitive_root(const Word& w);

// Group presentation on a ranked alphabet; relators are kept cyclically
// reduced (their normal closure is unchanged by that).
struct GroupPresentation {
    Alphabet generators;
    std::vector<Word> relators;

    GroupPresentation() = default;
    GroupPresentation(Alphabet gens, std::vector<Word> rels);
    bool operator==(const GroupPresentation&) const = default;
};

// Elements of F x| <t> in the normal form t^k w, w in the fiber.
// The input word uses fiber letters 0..rank-1 and index rank for t.
struct FbcNormalForm {
    long long t_exponent = 0;
    Word fiber_part;
    bool operator==(const FbcNormalForm&) const = default;
};

FbcNormalForm fbc_normal_form(const std::vector<Letter>& raw, const FreeAutomorphism& phi);
FbcNormalForm fbc_mul(const FbcNormalForm& a, const FbcNormalForm& b, const FreeAutomorphism& phi);
FbcNormalForm fbc_inv(const FbcNormalForm& a, const FreeAutomorphism& phi);

} // namespace suspkit

#endif
