#include "autotext/config_space.hpp"

#include <limits>
#include <stdexcept>

namespace autotext {
namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

void check_config(const SpaceDescriptor& desc, const ConfigValues& values) {
    if (values.size() != desc.slots.size()) {
        throw std::invalid_argument("configuration does not match space descriptor");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] >= static_cast<int>(desc.slots[i].domain.size())) {
            throw std::invalid_argument("slot value out of domain: " + desc.slots[i].name);
        }
    }
}

void extend_neighborhood(const SpaceDescriptor& desc, const ConfigValues& base,
                         std::size_t first_slot, int budget, ConfigValues& current,
                         std::vector<ConfigValues>& out) {
    for (std::size_t s = first_slot; s < desc.slots.size(); ++s) {
        const int original = current[s];
        for (int v = 0; v < static_cast<int>(desc.slots[s].domain.size()); ++v) {
            if (v == base[s]) continue;
            current[s] = v;
            if (desc.is_valid(current)) out.push_back(current);
            if (budget > 1) extend_neighborhood(desc, base, s + 1, budget - 1, current, out);
        }
        current[s] = original;
    }
}

}  // namespace

bool SpaceDescriptor::is_valid(const ConfigValues& values) const {
    if (tokenizer_slots.empty()) return true;
    for (std::size_t s : tokenizer_slots) {
        if (values[s] == kTokenizerOn) return true;
    }
    return false;
}

std::size_t SpaceDescriptor::find_slot(const std::string& name) const {
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].name == name) return i;
    }
    return kNpos;
}

SpaceDescriptor default_space() {
    SpaceDescriptor desc;
    const std::vector<std::string> trivalent = {"remove", "group", "identity"};
    const std::vector<std::string> bivalent = {"apply", "identity"};
    desc.slots.push_back({"hashtag", trivalent});
    desc.slots.push_back({"number", trivalent});
    desc.slots.push_back({"url", trivalent});
    desc.slots.push_back({"user", trivalent});
    desc.slots.push_back({"diacritic", bivalent});
    desc.slots.push_back({"duplication", bivalent});
    desc.slots.push_back({"punctuation", bivalent});
    desc.slots.push_back({"case", bivalent});
    for (const auto& name : tokenizer_names()) {
        desc.tokenizer_slots.push_back(desc.slots.size());
        desc.slots.push_back({name, {"on", "off"}});
    }
    desc.slots.push_back({"alpha", {"0.9", "0.95", "0.99", "1.0"}});
    desc.slots.push_back({"min_freq", {"1", "3", "5", "10"}});
    desc.slots.push_back({"scheme", {"tf", "tfidf"}});
    desc.slots.push_back({"classifier", {"linear_svm"}});
    return desc;
}

std::uint64_t space_size(const SpaceDescriptor& desc) {
    const auto mul = [](std::uint64_t a, std::uint64_t b) {
        if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
            throw std::overflow_error("space size overflow");
        }
        return a * b;
    };
    std::uint64_t total = 1;
    std::vector<bool> is_tok(desc.slots.size(), false);
    for (std::size_t s : desc.tokenizer_slots) is_tok[s] = true;
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        if (!is_tok[i]) total = mul(total, desc.slots[i].domain.size());
    }
    if (!desc.tokenizer_slots.empty()) {
        std::uint64_t tok_combos = 1;
        for (std::size_t s : desc.tokenizer_slots) tok_combos = mul(tok_combos, desc.slots[s].domain.size());
        total = mul(total, tok_combos - 1);  // all-off is invalid
    }
    return total;
}

int delta(const SpaceDescriptor& desc, std::size_t slot, int a, int b) {
    if (slot >= desc.slots.size()) throw std::invalid_argument("slot index out of range");
    const int card = static_cast<int>(desc.slots[slot].domain.size());
    if (a < 0 || a >= card || b < 0 || b >= card) {
        throw std::invalid_argument("value does not belong to slot " + desc.slots[slot].name);
    }
    return a == b ? 0 : 1;
}

int hamming_distance(const SpaceDescriptor& desc, const ConfigValues& u, const ConfigValues& v) {
    check_config(desc, u);
    check_config(desc, v);
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += delta(desc, i, u[i], v[i]);
    return d;
}

std::vector<ConfigValues> neighborhood(const SpaceDescriptor& desc, const ConfigValues& c, int r) {
    check_config(desc, c);
    if (r < 1) throw std::invalid_argument("neighborhood radius must be >= 1");
    std::vector<ConfigValues> out;
    ConfigValues current = c;
    extend_neighborhood(desc, c, 0, r, current, out);
    return out;
}

ConfigValues random_config(const SpaceDescriptor& desc, std::mt19937_64& rng) {
    ConfigValues values(desc.slots.size());
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        values[i] = static_cast<int>(rng() % desc.slots[i].domain.size());
    }
    while (!desc.is_valid(values)) {
        for (std::size_t s : desc.tokenizer_slots) {
            values[s] = static_cast<int>(rng() % desc.slots[s].domain.size());
        }
    }
    return values;
}

std::vector<ConfigValues> enumerate_space(const SpaceDescriptor& desc) {
    std::vector<ConfigValues> out;
    ConfigValues values(desc.slots.size(), 0);
    while (true) {
        if (desc.is_valid(values)) out.push_back(values);
        std::size_t i = desc.slots.size();
        while (i > 0) {
            --i;
            if (++values[i] < static_cast<int>(desc.slots[i].domain.size())) break;
            values[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::string canonical_encoding(const SpaceDescriptor& desc, const ConfigValues& values) {
    check_config(desc, values);
    std::string out;
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        if (i > 0) out.push_back(';');
        out += desc.slots[i].name;
        out.push_back('=');
        out += desc.slots[i].domain[values[i]];
    }
    return out;
}

PipelineConfig decode_pipeline(const SpaceDescriptor& desc, const ConfigValues& values) {
    check_config(desc, values);
    PipelineConfig cfg;
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        const auto& name = desc.slots[i].name;
        const auto& value = desc.slots[i].domain[values[i]];
        if (name == "hashtag") cfg.prep.hashtag = parse_pattern_mode(value);
        else if (name == "number") cfg.prep.number = parse_pattern_mode(value);
        else if (name == "url") cfg.prep.url = parse_pattern_mode(value);
        else if (name == "user") cfg.prep.user = parse_pattern_mode(value);
        else if (name == "diacritic") cfg.prep.diacritic = parse_toggle_mode(value);
        else if (name == "duplication") cfg.prep.duplication = parse_toggle_mode(value);
        else if (name == "punctuation") cfg.prep.punctuation = parse_toggle_mode(value);
        else if (name == "case") cfg.prep.case_fold = parse_toggle_mode(value);
        else if (name == "alpha") cfg.weighting.max_filter_alpha = std::stod(value);
        else if (name == "min_freq") cfg.weighting.min_filter_freq = std::stoi(value);
        else if (name == "scheme") cfg.weighting.scheme = parse_weighting_scheme(value);
        else if (name == "classifier") { /* singleton slot */ }
        else cfg.tokenizers.enabled[tokenizer_index(name)] = value == "on";
    }
    if (!cfg.tokenizers.any()) {
        throw std::invalid_argument("configuration enables no tokenizer");
    }
    return cfg;
}

nlohmann::ordered_json config_to_json(const SpaceDescriptor& desc, const ConfigValues& values) {
    check_config(desc, values);
    nlohmann::ordered_json j;
    std::vector<bool> is_tok(desc.slots.size(), false);
    for (std::size_t s : desc.tokenizer_slots) is_tok[s] = true;
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        const auto& name = desc.slots[i].name;
        const auto& value = desc.slots[i].domain[values[i]];
        if (is_tok[i]) {
            if (j.find("tokenizers") == j.end()) j["tokenizers"] = nlohmann::ordered_json::array();
            if (values[i] == kTokenizerOn) j["tokenizers"].push_back(name);
        } else if (name == "alpha") {
            j[name] = std::stod(value);
        } else if (name == "min_freq") {
            j[name] = std::stoi(value);
        } else {
            j[name] = value;
        }
    }
    return j;
}

ConfigValues config_from_json(const SpaceDescriptor& desc, const nlohmann::json& j) {
    ConfigValues values(desc.slots.size(), 0);
    std::vector<bool> is_tok(desc.slots.size(), false);
    for (std::size_t s : desc.tokenizer_slots) is_tok[s] = true;
    for (std::size_t i = 0; i < desc.slots.size(); ++i) {
        const auto& slot = desc.slots[i];
        std::string value;
        if (is_tok[i]) {
            bool on = false;
            for (const auto& name : j.at("tokenizers")) {
                if (name.get<std::string>() == slot.name) { on = true; break; }
            }
            value = on ? "on" : "off";
        } else if (slot.name == "alpha") {
            const double a = j.at("alpha").get<double>();
            std::size_t match = kNpos;
            for (std::size_t v = 0; v < slot.domain.size(); ++v) {
                if (std::stod(slot.domain[v]) == a) match = v;
            }
            if (match == kNpos) throw std::invalid_argument("alpha outside domain");
            values[i] = static_cast<int>(match);
            continue;
        } else if (slot.name == "min_freq") {
            value = std::to_string(j.at("min_freq").get<int>());
        } else {
            value = j.at(slot.name).get<std::string>();
        }
        std::size_t match = kNpos;
        for (std::size_t v = 0; v < slot.domain.size(); ++v) {
            if (slot.domain[v] == value) match = v;
        }
        if (match == kNpos) {
            throw std::invalid_argument("value outside domain for slot " + slot.name);
        }
        values[i] = static_cast<int>(match);
    }
    if (!desc.is_valid(values)) throw std::invalid_argument("configuration enables no tokenizer");
    return values;
}

}  // namespace autotext
