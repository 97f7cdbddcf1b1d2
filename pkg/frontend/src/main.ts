import { ApiClient } from "./api.js";
import { GameApp } from "./app.js";
import { renderSession } from "./render.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const api = new ApiClient("");
const root = byId<HTMLDivElement>("game");
const errorBox = byId<HTMLDivElement>("error");
const hintBox = byId<HTMLDivElement>("hint");

const app = new GameApp(api, {
  onUpdate: (session) => {
    errorBox.textContent = "";
    hintBox.textContent = "";
    root.innerHTML = renderSession(session);
    for (const button of root.querySelectorAll<HTMLButtonElement>("button.action")) {
      button.addEventListener("click", () => {
        void app.submit(button.dataset.action!);
      });
    }
  },
  onError: (message) => {
    errorBox.textContent = message;
  },
});

byId<HTMLFormElement>("new-game").addEventListener("submit", (event) => {
  event.preventDefault();
  const m = Number(byId<HTMLInputElement>("input-m").value);
  const n = Number(byId<HTMLInputElement>("input-n").value);
  const role = Number(byId<HTMLSelectElement>("input-role").value);
  void app.create(m, n, role);
});

byId<HTMLButtonElement>("hint-button").addEventListener("click", () => {
  void app.hint().then((hint) => {
    if (hint) hintBox.textContent = `try ${hint.action} [${hint.rule}]`;
  });
});
