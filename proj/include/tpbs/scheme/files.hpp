#pragma once

#include <string>

#include "tpbs/scheme/scheme.hpp"

namespace tpbs {

// The six on-disk kinds. Each file is a four-byte magic, a version byte and
// the object in the core binary encoding; decoders reject trailing bytes.
Bytes encode_params_file(const Params& p);
Bytes encode_pp_file(const PublicParams& pp);
Bytes encode_msk_file(const TrapdoorPair& msk);
Bytes encode_mdk_file(const TrapdoorPair& mdk);
Bytes encode_usk_file(const UserSigningKey& usk);
Bytes encode_signature_file(const TpbsSignature& sig);

Params decode_params_file(ByteSpan bytes);
PublicParams decode_pp_file(ByteSpan bytes);
TrapdoorPair decode_msk_file(ByteSpan bytes);
TrapdoorPair decode_mdk_file(ByteSpan bytes);
UserSigningKey decode_usk_file(ByteSpan bytes);
TpbsSignature decode_signature_file(ByteSpan bytes);

void write(ByteWriter& w, const TpbsSignature& sig);
TpbsSignature read_signature(ByteReader& r);

// Throws IoError naming the path.
Bytes read_file(const std::string& path);
void write_file(const std::string& path, ByteSpan bytes);

}  // namespace tpbs
