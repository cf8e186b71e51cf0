/** Bootstrap: read the service base URL (query parameter `service`, falling
 * back to the local default) and mount the editor. */

import { LexcompClient } from "./api.js";
import { initApp } from "./app.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8000";
const root = document.getElementById("lexcomp-app");
if (root === null) {
  throw new Error("missing #lexcomp-app mount point");
}
initApp(root, new LexcompClient(baseUrl));
