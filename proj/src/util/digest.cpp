#include "apbench/util/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace apbench::digest {

namespace {

std::string to_hex(const unsigned char* data, std::size_t len) {
    static const char* kHex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(kHex[data[i] >> 4]);
        out.push_back(kHex[data[i] & 0xF]);
    }
    return out;
}

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new()) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
            throw std::runtime_error("sha256 init failed");
        }
    }
    ~Sha256() { EVP_MD_CTX_free(ctx_); }

    void update(std::string_view data) {
        EVP_DigestUpdate(ctx_, data.data(), data.size());
    }

    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> buf{};
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_, buf.data(), &len);
        return to_hex(buf.data(), len);
    }

private:
    EVP_MD_CTX* ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view data) {
    Sha256 h;
    h.update(data);
    return h.hex();
}

std::string sha256_hex_fields(const std::vector<std::string_view>& fields) {
    Sha256 h;
    for (const auto& f : fields) {
        h.update(std::to_string(f.size()));
        h.update(":");
        h.update(f);
    }
    return h.hex();
}

}  // namespace apbench::digest
