#pragma once

// Line-oriented key/value documents:
//
//     <kind> v<version>
//     <key> <token> <token> ...
//     ...
//     end
//
// Tokens are whitespace-free. Keys may repeat; order is preserved. The
// trailing "end" line makes truncation detectable.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dualpoly {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Document {
    struct Entry {
        std::string key;
        std::vector<std::string> tokens;
    };

    std::string kind;
    int version = 1;
    std::vector<Entry> entries;

    void add(std::string key, std::vector<std::string> tokens)
    {
        entries.push_back({std::move(key), std::move(tokens)});
    }

    std::vector<const Entry*> all(const std::string& key) const
    {
        std::vector<const Entry*> out;
        for (const auto& e : entries)
            if (e.key == key)
                out.push_back(&e);
        return out;
    }

    /// The tokens of the single entry named `key`.
    const std::vector<std::string>& one(const std::string& key) const
    {
        auto found = all(key);
        if (found.size() != 1)
            throw FormatError("expected exactly one '" + key + "' line, found " + std::to_string(found.size()));
        return found.front()->tokens;
    }

    /// The single token of the single entry named `key`.
    const std::string& scalar(const std::string& key) const
    {
        const auto& t = one(key);
        if (t.size() != 1)
            throw FormatError("'" + key + "' takes exactly one value");
        return t.front();
    }
};

inline void write_document(std::ostream& os, const Document& doc)
{
    os << doc.kind << " v" << doc.version << "\n";
    for (const auto& e : doc.entries) {
        os << e.key;
        for (const auto& t : e.tokens)
            os << ' ' << t;
        os << '\n';
    }
    os << "end\n";
}

inline std::string to_text(const Document& doc)
{
    std::ostringstream os;
    write_document(os, doc);
    return os.str();
}

inline Document read_document(std::istream& is)
{
    auto split = [](const std::string& line) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;)
            tokens.push_back(std::move(t));
        return tokens;
    };

    Document doc;
    std::string line;
    if (!std::getline(is, line))
        throw FormatError("empty document");
    auto header = split(line);
    if (header.size() != 2 || header[1].size() < 2 || header[1][0] != 'v')
        throw FormatError("malformed header line");
    doc.kind = header[0];
    try {
        std::size_t used = 0;
        doc.version = std::stoi(header[1].substr(1), &used);
        if (used != header[1].size() - 1)
            throw FormatError("malformed version");
    } catch (const std::logic_error&) {
        throw FormatError("malformed version");
    }

    bool ended = false;
    while (std::getline(is, line)) {
        auto tokens = split(line);
        if (tokens.empty())
            continue;
        if (ended)
            throw FormatError("content after 'end'");
        if (tokens.size() == 1 && tokens[0] == "end") {
            ended = true;
            continue;
        }
        std::string key = std::move(tokens.front());
        tokens.erase(tokens.begin());
        doc.add(std::move(key), std::move(tokens));
    }
    if (!ended)
        throw FormatError("document truncated: missing 'end'");
    return doc;
}

inline Document parse_document(const std::string& text)
{
    std::istringstream is(text);
    return read_document(is);
}

} // namespace dualpoly
