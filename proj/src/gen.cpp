#include "rpys/gen.hpp"

#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string_view>

namespace rpys {

namespace {

// Thin wrapper over mt19937_64 that avoids the standard distributions, whose
// output is implementation-defined; corpora must be reproducible from the
// seed alone.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int uniform_int(int lo, int hi) {  // inclusive
        const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<int>(next() % range);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Failures before the first success; capped so extreme rates stay sane.
    int geometric(double p) {
        int k = 0;
        while (k < 400 && !bernoulli(p)) ++k;
        return k;
    }

  private:
    std::mt19937_64 engine_;
};

constexpr std::array<std::string_view, 20> kSurnames = {
    "ALMEIDA", "BAKER", "CHEN",   "DIAZ",   "EVANS",  "FISCHER", "GARCIA", "HUANG", "IVANOV", "JANSEN",
    "KUMAR",   "LARSEN", "MOREAU", "NAKANO", "OKAFOR", "PETROV",  "QUINN",  "ROSSI", "SATO",   "TANAKA"};

constexpr std::array<std::string_view, 8> kJournals = {
    "J SYNTH INFORM SCI", "ACTA METRICA",       "REV QUANT STUD",  "ANN DATA SCI",
    "J MODEL RES",        "STUD COMMUN THEOR",  "INT J KNOWL ORG", "ARCH SCI METH"};

std::string background_cr(SeededRng& rng, int rpy) {
    const auto surname = kSurnames[static_cast<std::size_t>(rng.uniform_int(0, kSurnames.size() - 1))];
    const char initial = static_cast<char>('A' + rng.uniform_int(0, 25));
    const auto journal = kJournals[static_cast<std::size_t>(rng.uniform_int(0, kJournals.size() - 1))];
    const int volume = rng.uniform_int(1, 60);
    const int page = rng.uniform_int(1, 999);
    std::string cr{surname};
    cr += ' ';
    cr += initial;
    cr += ", " + std::to_string(rpy) + ", ";
    cr += journal;
    cr += ", V" + std::to_string(volume) + ", P" + std::to_string(page);
    return cr;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

bool all_alnum(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
        if (!ok) return false;
    }
    return true;
}

// Drops the volume and page tokens, producing the incomplete citation
// variants seen in real reference lists.
std::string degrade_cr(std::string_view cr) {
    std::string out;
    std::size_t start = 0;
    bool first = true;
    while (start <= cr.size()) {
        const auto sep = cr.find(", ", start);
        const auto token = sep == std::string_view::npos ? cr.substr(start) : cr.substr(start, sep - start);
        const bool is_volume = token.size() >= 2 && token[0] == 'V' && all_digits(token.substr(1));
        const bool is_page = token.size() >= 2 && token[0] == 'P' && all_alnum(token.substr(1));
        if (!is_volume && !is_page && !token.empty()) {
            if (!first) out += ", ";
            out += token;
            first = false;
        }
        if (sep == std::string_view::npos) break;
        start = sep + 2;
    }
    return out;
}

void validate(const GenSpec& spec) {
    if (!spec.citing_years.valid()) throw std::invalid_argument("gen: empty citing year range");
    if (spec.refs_min < 0 || spec.refs_min > spec.refs_max)
        throw std::invalid_argument("gen: refs_min must lie in [0, refs_max]");
    if (spec.age_peak < 0) throw std::invalid_argument("gen: age_peak must be >= 0");
    if (!(spec.age_decay > 0.0) || spec.age_decay > 1.0)
        throw std::invalid_argument("gen: age_decay must lie in (0, 1]");
    if (spec.incomplete_rate < 0.0 || spec.incomplete_rate > 1.0)
        throw std::invalid_argument("gen: incomplete_rate must lie in [0, 1]");
    for (const auto& classic : spec.classics) {
        if (!(classic.weight > 0.0)) throw std::invalid_argument("gen: classic weights must be positive");
        if (classic.cr.empty()) throw std::invalid_argument("gen: classic reference string is empty");
    }
}

}  // namespace

Corpus generate(const GenSpec& spec) {
    validate(spec);
    SeededRng rng(spec.seed);

    double classic_weight = 0.0;
    for (const auto& classic : spec.classics) classic_weight += classic.weight;

    Corpus corpus;
    corpus.provenance.push_back("generated:seed=" + std::to_string(spec.seed));
    corpus.records.reserve(spec.n_records);

    for (std::size_t i = 0; i < spec.n_records; ++i) {
        Record rec;
        char id[24];
        std::snprintf(id, sizeof(id), "GEN-%06zu", i + 1);
        rec.id = id;
        rec.journal = "J SYNTHETIC STUDIES";
        rec.title = "Synthetic record " + std::to_string(i + 1);
        rec.doc_type = "Article";
        const int citing_year = rng.uniform_int(spec.citing_years.min, spec.citing_years.max);
        rec.pub_year = citing_year;

        const int n_refs = rng.uniform_int(spec.refs_min, spec.refs_max);
        rec.raw_refs.reserve(static_cast<std::size_t>(n_refs));
        for (int r = 0; r < n_refs; ++r) {
            // Mixture draw: one unit of background mass plus the classics.
            const double pick = rng.unit() * (1.0 + classic_weight);
            if (pick < 1.0 || spec.classics.empty()) {
                const int age = spec.age_peak + rng.geometric(spec.age_decay);
                rec.raw_refs.push_back(background_cr(rng, citing_year - age));
                continue;
            }
            double cumulative = 1.0;
            const Classic* chosen = &spec.classics.back();
            for (const auto& classic : spec.classics) {
                cumulative += classic.weight;
                if (pick < cumulative) {
                    chosen = &classic;
                    break;
                }
            }
            if (spec.incomplete_rate > 0.0 && rng.bernoulli(spec.incomplete_rate)) {
                rec.raw_refs.push_back(degrade_cr(chosen->cr));
            } else {
                rec.raw_refs.push_back(chosen->cr);
            }
        }
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

}  // namespace rpys
