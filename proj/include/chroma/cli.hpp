#pragma once

// Placeholder during bring-up; the full CLI lands with the tool modules.
namespace chroma {
inline int cli_main(int, char**) { return 0; }
}  // namespace chroma
