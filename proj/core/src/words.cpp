#include "suspkit/words.hpp"

#include "suspkit/stallings.hpp"

#include <algorithm>
#include <cctype>

namespace suspkit {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_label(names_[i]))
            throw Error("invalid generator label '" + names_[i] + "'");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate generator label '" + names_[i] + "'");
    }
}

bool Alphabet::valid_label(const std::string& label) {
    if (label.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(label[0]))) return false;
    for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::optional<int> Alphabet::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == label) return int(i);
    return std::nullopt;
}

std::vector<Letter> Word::free_reduce(std::vector<Letter> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l == 0) throw Error("zero letter");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

int Word::max_gen_index() const {
    int m = -1;
    for (Letter l : letters_) m = std::max(m, gen_of(l));
    return m;
}

namespace {
// a < a^-1 < b < b^-1 < ...
inline int letter_key(Letter l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }
} // namespace

bool Word::operator<(const Word& other) const {
    if (letters_.size() != other.letters_.size())
        return letters_.size() < other.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        int a = letter_key(letters_[i]), b = letter_key(other.letters_[i]);
        if (a != b) return a < b;
    }
    return false;
}

Word concat(const Word& u, const Word& v) {
    std::vector<Letter> raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(raw));
}

Word inverse(const Word& w) {
    std::vector<Letter> raw;
    raw.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        raw.push_back(-*it);
    return Word(std::move(raw));
}

Word power(const Word& w, long long k) {
    if (k == 0) return Word();
    const Word base = k > 0 ? w : inverse(w);
    long long n = k > 0 ? k : -k;
    if (w.length() > 0 && n > 4'000'000 / (long long)w.length())
        throw Error("word power too large");
    std::vector<Letter> raw;
    raw.reserve(base.length() * std::size_t(n));
    for (long long i = 0; i < n; ++i)
        raw.insert(raw.end(), base.letters().begin(), base.letters().end());
    return Word(std::move(raw));
}

CyclicForm cyclic_reduce(const Word& w) {
    std::vector<Letter> ls = w.letters();
    std::vector<Letter> collar;
    while (ls.size() >= 2 && ls.front() == -ls.back()) {
        collar.push_back(ls.front());
        ls.erase(ls.begin());
        ls.pop_back();
    }
    return CyclicForm{Word(std::move(ls)), Word(std::move(collar))};
}

bool is_cyclically_reduced(const Word& w) {
    return w.length() < 2 || w.letters().front() != -w.letters().back();
}

Word least_rotation(const Word& w) {
    if (w.is_identity()) return w;
    Word best = w;
    std::vector<Letter> cur = w.letters();
    for (std::size_t i = 1; i < w.length(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        Word cand{std::vector<Letter>(cur)};
        if (cand.length() == w.length() && cand < best) best = cand;
    }
    return best;
}

std::optional<Word> free_conjugate(const Word& u, const Word& v) {
    CyclicForm cu = cyclic_reduce(u);
    CyclicForm cv = cyclic_reduce(v);
    if (cu.core.length() != cv.core.length()) return std::nullopt;
    if (cu.core.is_identity())
        return concat(cu.conjugator, inverse(cv.conjugator));
    std::vector<Letter> rot = cu.core.letters();
    for (std::size_t i = 0; i < cu.core.length(); ++i) {
        if (Word(std::vector<Letter>(rot)) == cv.core) {
            // rotating by i conjugates the core by its length-i prefix
            std::vector<Letter> prefix(cu.core.letters().begin(), cu.core.letters().begin() + i);
            Word c = concat(concat(cu.conjugator, Word(std::move(prefix))), inverse(cv.conjugator));
            return c;
        }
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    return std::nullopt;
}

Word apply_images(const std::vector<Word>& images, const Word& w) {
    std::vector<Letter> raw;
    for (Letter l : w.letters()) {
        const Word& im = images.at(gen_of(l));
        if (l > 0)
            raw.insert(raw.end(), im.letters().begin(), im.letters().end());
        else
            for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
                raw.push_back(-*it);
    }
    return Word(std::move(raw));
}

FreeAutomorphism::FreeAutomorphism(Alphabet domain, std::vector<Word> images,
                                   std::vector<Word> inverse_images)
    : domain_(std::move(domain)), images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
    const int r = int(domain_.rank());
    if (int(images_.size()) != r || int(inverse_images_.size()) != r)
        throw Error("automorphism image count does not match rank");
    for (const Word& w : images_)
        if (w.max_gen_index() >= r) throw Error("automorphism image uses unknown generator");
    for (const Word& w : inverse_images_)
        if (w.max_gen_index() >= r) throw Error("automorphism inverse image uses unknown generator");
    for (int i = 0; i < r; ++i) {
        if (apply_images(images_, inverse_images_[i]) != Word::generator(i))
            throw Error("inverse certificate fails on generator " + domain_.name(i));
        if (apply_images(inverse_images_, images_[i]) != Word::generator(i))
            throw Error("inverse certificate fails on generator " + domain_.name(i));
    }
}

FreeAutomorphism FreeAutomorphism::from_images(Alphabet domain, std::vector<Word> images) {
    auto inv = invert_basis_map(int(domain.rank()), images);
    if (!inv)
        throw Error("generator images are not a basis; supply an inverse explicitly");
    return FreeAutomorphism(std::move(domain), std::move(images), std::move(*inv));
}

FreeAutomorphism FreeAutomorphism::identity(Alphabet domain) {
    std::vector<Word> ims;
    for (std::size_t i = 0; i < domain.rank(); ++i) ims.push_back(Word::generator(int(i)));
    auto inv = ims;
    return FreeAutomorphism(std::move(domain), std::move(ims), std::move(inv));
}

FreeAutomorphism FreeAutomorphism::inner(Alphabet domain, const Word& g) {
    std::vector<Word> ims, inv;
    const Word gi = inverse(g);
    for (std::size_t i = 0; i < domain.rank(); ++i) {
        ims.push_back(concat(concat(gi, Word::generator(int(i))), g));
        inv.push_back(concat(concat(g, Word::generator(int(i))), gi));
    }
    return FreeAutomorphism(std::move(domain), std::move(ims), std::move(inv));
}

Word FreeAutomorphism::apply(const Word& w) const {
    if (w.max_gen_index() >= int(domain_.rank())) throw Error("word not over automorphism domain");
    return apply_images(images_, w);
}

Word FreeAutomorphism::apply_inverse(const Word& w) const {
    if (w.max_gen_index() >= int(domain_.rank())) throw Error("word not over automorphism domain");
    return apply_images(inverse_images_, w);
}

Word FreeAutomorphism::apply_power(const Word& w, long long k) const {
    Word cur = w;
    for (long long i = 0; i < (k > 0 ? k : -k); ++i)
        cur = k > 0 ? apply(cur) : apply_inverse(cur);
    return cur;
}

FreeAutomorphism FreeAutomorphism::inverted() const {
    return FreeAutomorphism(domain_, inverse_images_, images_);
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
    if (!(phi.domain() == psi.domain())) throw Error("automorphism alphabets differ");
    std::vector<Word> ims, inv;
    for (std::size_t i = 0; i < phi.domain().rank(); ++i) {
        ims.push_back(phi.apply(psi.image(int(i))));
        inv.push_back(psi.apply_inverse(phi.inverse_images()[i]));
    }
    return FreeAutomorphism(phi.domain(), std::move(ims), std::move(inv));
}

Word primitive_root(const Word& w) {
    if (w.is_identity()) return w;
    CyclicForm cf = cyclic_reduce(w);
    const auto& core = cf.core.letters();
    const std::size_t n = core.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i)
            periodic = core[i] == core[i - d];
        if (periodic) {
            std::vector<Letter> p(core.begin(), core.begin() + d);
            return concat(concat(cf.conjugator, Word(std::move(p))), inverse(cf.conjugator));
        }
    }
    return w;
}

GroupPresentation::GroupPresentation(Alphabet gens, std::vector<Word> rels)
    : generators(std::move(gens)) {
    for (Word& r : rels) {
        if (r.max_gen_index() >= int(generators.rank()))
            throw Error("relator uses unknown generator");
        Word core = cyclic_reduce(r).core;
        if (!core.is_identity()) relators.push_back(std::move(core));
    }
}

FbcNormalForm fbc_normal_form(const std::vector<Letter>& raw, const FreeAutomorphism& phi) {
    const int t_index = int(phi.domain().rank());
    FbcNormalForm nf;
    std::vector<Letter> fiber;
    auto flush = [&](long long shift) {
        // t^k w t^s = t^(k+s) phi^s(w)
        Word w = phi.apply_power(Word(std::move(fiber)), shift);
        fiber = w.letters();
        nf.t_exponent += shift;
    };
    for (Letter l : raw) {
        if (l == 0) throw Error("zero letter");
        if (gen_of(l) == t_index) {
            flush(sign_of(l));
        } else if (gen_of(l) < t_index) {
            fiber.push_back(l);
        } else {
            throw Error("letter outside fiber-and-t alphabet");
        }
    }
    nf.fiber_part = Word(std::move(fiber));
    return nf;
}

FbcNormalForm fbc_mul(const FbcNormalForm& a, const FbcNormalForm& b, const FreeAutomorphism& phi) {
    FbcNormalForm out;
    out.t_exponent = a.t_exponent + b.t_exponent;
    out.fiber_part = concat(phi.apply_power(a.fiber_part, b.t_exponent), b.fiber_part);
    return out;
}

FbcNormalForm fbc_inv(const FbcNormalForm& a, const FreeAutomorphism& phi) {
    FbcNormalForm out;
    out.t_exponent = -a.t_exponent;
    out.fiber_part = phi.apply_power(inverse(a.fiber_part), -a.t_exponent);
    return out;
}

} // namespace suspkit
