import init, { moments, production_matrix, bridge_triangle } from "./pkg/eulerian_moments_wasm.js";

const $ = (id) => document.getElementById(id);
const vars = () => [$("x").value, $("y").value, $("k").value];
const size = () => Number($("n").value);

function parse(json) {
  const v = JSON.parse(json);
  $("error").textContent = v.error ?? "";
  return v.error ? null : v;
}

function fillTable(table, rows) {
  table.replaceChildren(
    ...rows.map((row) => {
      const tr = document.createElement("tr");
      for (const entry of row) {
        const td = document.createElement("td");
        td.textContent = entry;
        if (entry === "0") td.className = "zero";
        tr.appendChild(td);
      }
      return tr;
    }),
  );
}

await init();

$("run-moments").onclick = () => {
  const v = parse(moments($("moment-family").value, size(), ...vars()));
  if (!v) return;
  $("moments-out").replaceChildren(
    ...v.entries.map((e) => {
      const li = document.createElement("li");
      li.textContent = e;
      return li;
    }),
  );
};

$("run-production").onclick = () => {
  const v = parse(production_matrix($("production-family").value, size(), ...vars()));
  if (!v) return;
  $("production-note").textContent = v.tridiagonal ? "Tridiagonal." : "Not tridiagonal.";
  fillTable($("production-out"), v.rows);
};

$("run-bridge").onclick = () => {
  const v = parse(bridge_triangle(size(), $("x").value));
  if (v) fillTable($("bridge-out"), v.rows);
};
