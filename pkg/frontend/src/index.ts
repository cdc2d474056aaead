import { Player } from "./player";

declare global {
  interface Window {
    chatternetPlayer?: Player | null;
  }
}

function boot(): void {
  const root =
    document.getElementById("player-root") ??
    (() => {
      const div = document.createElement("div");
      div.id = "player-root";
      document.body.appendChild(div);
      return div;
    })();
  window.chatternetPlayer = Player.fromEmbeddedJson(root);
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", boot);
} else {
  boot();
}
