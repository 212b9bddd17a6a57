#pragma once

#include <string>
#include <string_view>

#include "darkdetect/dom.hpp"

namespace darkdetect {

/// Parses an HTML byte stream into a document tree.
///
/// Encoding resolution order: byte-order mark, then `encoding_hint`, then a
/// <meta charset> prescan of the first 1024 bytes, then UTF-8. Supported
/// encodings: UTF-8, UTF-16 LE/BE, windows-1252 (which also covers the
/// iso-8859-1 and ascii labels, as browsers do).
///
/// Tree construction is error-recovering: tag soup never fails. Unclosed
/// elements are closed implicitly, <p>/<li>/<td>-style auto-closing rules
/// apply, comments and doctypes are dropped, tag names are lowercased,
/// entities are decoded, and html/head/body are synthesized when absent.
///
/// Throws DecodeError (with the byte offset) when the bytes cannot be
/// decoded under the resolved encoding, or when the charset label is
/// unsupported.
DomTree parse_document(std::string_view bytes, std::string_view encoding_hint = {});

/// Entity-decoding helper, exposed for tests: resolves &name;, &#n; and
/// &#xn; references. Unknown references pass through literally.
std::string decode_entities(std::string_view text);

}  // namespace darkdetect
