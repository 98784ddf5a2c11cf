#include "catlab/errors.hpp"
#include "catlab/image_lab.hpp"

#include <cctype>
#include <string>

namespace catlab {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto ch = static_cast<unsigned char>(bytes_[pos_]);
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(ch)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::uint64_t number(const char* what) {
        skip_space_and_comments();
        std::uint64_t v = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
            if (v > 0xFFFFFFFFULL) throw FormatError(std::string("PGM ") + what + " too large");
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw FormatError(std::string("PGM: expected ") + what);
        return v;
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t k) noexcept { pos_ += k; }
    bool at_end() const noexcept { return pos_ >= bytes_.size(); }
    char peek() const noexcept { return bytes_[pos_]; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

} // namespace

Configuration load_pgm(std::string_view bytes, PgmMode mode, std::vector<std::string>* warnings) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw FormatError("not a PGM file (expected magic P2 or P5)");
    }
    const bool binary = bytes[1] == '5';
    HeaderReader in(bytes);
    in.advance(2);
    const auto width = in.number("width");
    const auto height = in.number("height");
    const auto maxval = in.number("maxval");

    if (width == 0 || height == 0) throw FormatError("PGM has zero size");
    if (width != height) {
        throw FormatError("PGM is not square (" + std::to_string(width) + "x" +
                          std::to_string(height) + ")");
    }
    if (width > static_cast<std::uint64_t>(max_image_side)) throw FormatError("PGM too large");
    if (maxval == 0 || maxval > 65535) throw FormatError("PGM maxval out of range");
    if (maxval != 255) {
        if (mode == PgmMode::Strict) {
            throw FormatError("PGM maxval is " + std::to_string(maxval) + ", expected 255");
        }
        if (warnings) {
            warnings->push_back("rescaling PGM samples from maxval " + std::to_string(maxval) +
                                " to 255");
        }
    }

    const Modulus mod(static_cast<std::int64_t>(width));
    const std::uint64_t count = mod.cell_count();
    std::vector<std::uint8_t> cells(count);
    auto store = [&](std::uint64_t i, std::uint64_t sample) {
        if (sample > maxval) throw FormatError("PGM sample exceeds maxval");
        cells[i] = static_cast<std::uint8_t>(maxval == 255 ? sample : (sample * 255 + maxval / 2) / maxval);
    };

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.at_end() || !std::isspace(static_cast<unsigned char>(in.peek()))) {
            throw FormatError("PGM header not terminated by whitespace");
        }
        in.advance(1);
        const std::uint64_t bytes_per_sample = maxval > 255 ? 2 : 1;
        if (bytes.size() - in.pos() < count * bytes_per_sample) throw FormatError("PGM raster truncated");
        const auto* raster = reinterpret_cast<const unsigned char*>(bytes.data() + in.pos());
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t sample = bytes_per_sample == 1
                                             ? raster[i]
                                             : (std::uint64_t{raster[2 * i]} << 8U) | raster[2 * i + 1];
            store(i, sample);
        }
    } else {
        for (std::uint64_t i = 0; i < count; ++i) store(i, in.number("sample"));
    }
    return Configuration(mod, std::move(cells));
}

std::string save_pgm(const Configuration& c) {
    const std::string side = std::to_string(c.side());
    std::string out = "P5\n" + side + " " + side + "\n255\n";
    const auto cells = c.cells();
    out.append(reinterpret_cast<const char*>(cells.data()), cells.size());
    return out;
}

} // namespace catlab
