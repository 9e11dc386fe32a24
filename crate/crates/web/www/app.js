import init, { modularSummary, fusionProduct, twistedSolution } from "./pkg/fusionkit_web.js";

const $ = (id) => document.getElementById(id);

function call(f, ...args) {
  try {
    return { value: JSON.parse(f(...args)) };
  } catch (e) {
    return { error: String(e) };
  }
}

function fmt(x, digits = 6) {
  return Number.isInteger(x) ? String(x) : x.toFixed(digits);
}

function tableHtml(header, rows) {
  const head = header.map((h) => `<th>${h}</th>`).join("");
  const body = rows.map((r) => `<tr>${r.map((c) => `<td>${c}</td>`).join("")}</tr>`).join("");
  return `<table><tr>${head}</tr>${body}</table>`;
}

function drawHeatmap(canvas, data) {
  const ctx = canvas.getContext("2d");
  const r = data.modulus.length;
  const size = Math.min(canvas.width, canvas.height);
  const cell = size / r;
  const max = Math.max(...data.modulus.flat());
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < r; i++) {
    for (let j = 0; j < r; j++) {
      const hue = ((data.phase[i][j] / (2 * Math.PI)) * 360 + 360) % 360;
      const light = 96 - 56 * (data.modulus[i][j] / max);
      ctx.fillStyle = `hsl(${hue}, 70%, ${light}%)`;
      ctx.fillRect(j * cell, i * cell, Math.ceil(cell), Math.ceil(cell));
    }
  }
  if (r <= 12) {
    ctx.fillStyle = "#1d232a";
    ctx.font = `${Math.min(12, cell / 3)}px system-ui`;
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    for (let i = 0; i < r; i++) {
      for (let j = 0; j < r; j++) {
        ctx.fillText(data.modulus[i][j].toFixed(3), (j + 0.5) * cell, (i + 0.5) * cell);
      }
    }
  }
}

function showModular(ev) {
  ev?.preventDefault();
  const n = Number($("mod-n").value);
  const k = Number($("mod-k").value);
  const { value, error } = call(modularSummary, n, k);
  if (error) {
    $("mod-status").innerHTML = `<span class="error">${error}</span>`;
    return;
  }
  $("mod-status").textContent =
    `${value.title}: ${value.weights.length} weights, c0 = ${fmt(value.c0)} mod 8, ` +
    `sum of squared dimensions ${fmt(value.global_dimension_squared)}. ` +
    "Colour hue is the phase of S, darkness its modulus.";
  drawHeatmap($("s-heatmap"), value);
  const weights = tableHtml(
    ["weight", "h", "dimension"],
    value.weights.map((w, i) => [w, value.conformal_weights[i], fmt(value.dims[i])]),
  );
  const checks = tableHtml(
    ["check", "result"],
    value.checks.map((c) => [c.name, `<span class="${c.passed ? "pass" : "fail"}">${c.passed ? "pass" : "fail"}</span>`]),
  );
  $("mod-info").innerHTML = weights + checks;
}

function showFusion(ev) {
  ev?.preventDefault();
  const { value, error } = call(
    fusionProduct,
    Number($("fus-n").value),
    Number($("fus-k").value),
    $("fus-a").value,
    $("fus-b").value,
  );
  if (error) {
    $("fusion-out").innerHTML = `<p class="error">${error}</p>`;
    return;
  }
  const terms = value.terms
    .map((t) => (t.multiplicity === 1 ? t.weight : `${t.multiplicity}&middot;${t.weight}`))
    .join(" &oplus; ");
  $("fusion-out").innerHTML =
    `<p><code>${value.lambda} &times; ${value.mu} = ${terms}</code></p>` +
    `<p>d<sub>&lambda;</sub>&middot;d<sub>&mu;</sub> = ${fmt(value.lhs)} = &Sigma; N d<sub>&nu;</sub> = ${fmt(value.rhs)}</p>`;
}

function drawGraph(canvas, nv) {
  const ctx = canvas.getContext("2d");
  const m = nv.length;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const y = canvas.height / 2 + 20;
  const step = canvas.width / (m + 1);
  const x = (i) => step * (i + 1);
  ctx.strokeStyle = "#3d6fb6";
  ctx.lineWidth = 2;
  for (let i = 0; i < m; i++) {
    for (let j = i + 1; j < m; j++) {
      if (nv[i][j] === 0) continue;
      ctx.beginPath();
      if (j === i + 1) {
        ctx.moveTo(x(i), y);
        ctx.lineTo(x(j), y);
      } else {
        const mid = (x(i) + x(j)) / 2;
        ctx.moveTo(x(i), y);
        ctx.quadraticCurveTo(mid, y - 40 - 12 * (j - i), x(j), y);
      }
      ctx.stroke();
    }
    // a loop marks a diagonal entry of N_v - I that is not zero
    const loop = nv[i][i] - 1;
    if (loop !== 0) {
      ctx.beginPath();
      ctx.strokeStyle = loop < 0 ? "#b3261e" : "#3d6fb6";
      ctx.arc(x(i), y + 18, 14, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.strokeStyle = "#3d6fb6";
    }
  }
  for (let i = 0; i < m; i++) {
    ctx.beginPath();
    ctx.fillStyle = "#fff";
    ctx.arc(x(i), y, 13, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    ctx.fillStyle = "#1d232a";
    ctx.font = "12px system-ui";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(String(i + 1), x(i), y);
  }
}

function showTwisted(ev) {
  ev?.preventDefault();
  $("tw-status").textContent = "solving...";
  setTimeout(() => {
    const { value, error } = call(twistedSolution, Number($("tw-k").value));
    if (error) {
      $("tw-status").innerHTML = `<span class="error">${error}</span>`;
      return;
    }
    $("tw-status").textContent =
      `${value.title}: ${value.m} twisted solitons, ${value.classes} solution class, ` +
      `graph of M = N_v - I ${value.coxeter ? `is ${value.coxeter}` : "has a loop weighted -1 (red)"}.`;
    drawGraph($("graph"), value.nv);
    const nv = tableHtml(
      ["", ...value.nv.map((_, i) => i + 1)],
      value.nv.map((row, i) => [i + 1, ...row]),
    );
    const idx = tableHtml(
      ["soliton", "dimension", "index", "printed", "ratio"],
      value.indices.map((x, i) => [i + 1, fmt(value.dims[i]), fmt(x), fmt(value.printed[i]), fmt(value.ratios[i])]),
    );
    $("tw-info").innerHTML =
      `<p>N<sub>v</sub></p>${nv}<p>&delta; = ${fmt(value.delta)}, &Sigma; d&sup2; = ${fmt(value.mu)}</p>${idx}`;
  }, 10);
}

await init();
$("modular-form").addEventListener("submit", showModular);
$("fusion-form").addEventListener("submit", showFusion);
$("twisted-form").addEventListener("submit", showTwisted);
showModular();
showFusion();
showTwisted();
